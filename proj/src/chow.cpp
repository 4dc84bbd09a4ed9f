#include "colorfan/chow.hpp"

#include <algorithm>

namespace colorfan {

const char* basis_name(Basis b) {
    switch (b) {
        case Basis::X: return "X";
        case Basis::F: return "F";
        case Basis::H: return "H";
    }
    return "?";
}

Basis basis_from_name(const std::string& name) {
    if (name == "X" || name == "x") return Basis::X;
    if (name == "F" || name == "f") return Basis::F;
    if (name == "H" || name == "h") return Basis::H;
    throw input_error("unknown basis '" + name + "'");
}

Divisor make_divisor(PosetPtr poset, Basis basis, std::map<int, Rational> coeffs) {
    Divisor d;
    d.poset = std::move(poset);
    d.basis = basis;
    for (auto& [id, c] : coeffs) {
        if (id <= 0 || id >= d.poset->set_count())
            throw input_error("divisor coefficient on invalid set id");
        if (c != 0) d.coeffs.emplace(id, std::move(c));
    }
    return d;
}

Divisor generator_divisor(PosetPtr poset, Basis basis, int set_id) {
    return make_divisor(std::move(poset), basis, {{set_id, Rational(1)}});
}

namespace {

int parity_sign(int k) { return k % 2 == 0 ? 1 : -1; }

// Moebius transforms between the coefficient vectors; each is triangular
// over the poset of nonempty colored sets.
std::map<int, Rational> x_to_f(const Poset& P, const std::map<int, Rational>& cx) {
    // c_F(T) = sum over nonempty S <= T of (-1)^(|T|-|S|) c_X(S)
    std::map<int, Rational> cf;
    for (const auto& [s, c] : cx) {
        int sz = P.size_of(s);
        for_each_superset(P, s, [&](int t) {
            Rational term = c * parity_sign(P.size_of(t) - sz);
            cf[t] += term;
        });
    }
    return cf;
}

std::map<int, Rational> f_to_x(const Poset& P, const std::map<int, Rational>& cf) {
    // c_X(Z) = sum over nonempty T <= Z of c_F(T)
    std::map<int, Rational> cx;
    for (const auto& [t, c] : cf)
        for_each_superset(P, t, [&](int z) { cx[z] += c; });
    return cx;
}

std::map<int, Rational> fh_swap(const Poset& P, const std::map<int, Rational>& in) {
    // c_H(T) = (-1)^(|T|+1) sum over S >= T of c_F(S), and identically with
    // F and H exchanged (the transform is an involution).
    std::map<int, Rational> out;
    for (const auto& [s, c] : in)
        for_each_nonempty_subset(P, s, [&](int t) {
            out[t] += c * parity_sign(P.size_of(t) + 1);
        });
    return out;
}

std::map<int, Rational> drop_zeros(std::map<int, Rational> m) {
    for (auto it = m.begin(); it != m.end();)
        it = it->second == 0 ? m.erase(it) : std::next(it);
    return m;
}

} // namespace

Divisor convert(const Divisor& d, Basis target) {
    if (d.basis == target) return d;
    const Poset& P = *d.poset;
    std::map<int, Rational> cur = d.coeffs;
    Basis at = d.basis;
    // Route: X <-> F <-> H
    while (at != target) {
        switch (at) {
            case Basis::X:
                cur = x_to_f(P, cur);
                at = Basis::F;
                break;
            case Basis::F:
                if (target == Basis::X) {
                    cur = f_to_x(P, cur);
                    at = Basis::X;
                } else {
                    cur = fh_swap(P, cur);
                    at = Basis::H;
                }
                break;
            case Basis::H:
                cur = fh_swap(P, cur);
                at = Basis::F;
                break;
        }
    }
    Divisor out;
    out.poset = d.poset;
    out.basis = target;
    out.coeffs = drop_zeros(std::move(cur));
    return out;
}

std::map<int, Rational> restrict_to_boolean(const Divisor& d, int maximal_id) {
    const Poset& P = *d.poset;
    if (!P.is_maximal(maximal_id))
        throw input_error("restrict_to_boolean needs a maximal colored set");
    Divisor h = convert(d, Basis::H);
    std::map<int, Rational> out;
    for (const auto& [s, a] : h.coeffs) {
        int x = P.intersect_id(s, maximal_id);
        if (x != P.empty_id()) out[x] += a;
    }
    return drop_zeros(std::move(out));
}

std::vector<Rational> dense_x_coefficients(const Divisor& d) {
    Divisor x = convert(d, Basis::X);
    std::vector<Rational> dense(d.poset->set_count(), Rational(0));
    for (const auto& [id, c] : x.coeffs) dense[id] = c;
    return dense;
}

DegreeEngine::DegreeEngine(const Fan& fan) : fan_(&fan) {
    const Poset& P = fan.poset();
    if (!fan.unimodularity().unimodular || !fan.top_balancing().balanced)
        throw internal_error("degree engine needs a unimodular balanced fan");

    rat_rays_.resize(P.set_count());
    for (int id = 1; id < P.set_count(); ++id)
        rat_rays_[id] = to_rational(fan.ray(id));

    dim_index_.assign(fan.cone_count(), -1);
    for (int d = 0; d <= fan.dim(); ++d) {
        const auto& cones = fan.cones_of_dim(d);
        for (int i = 0; i < static_cast<int>(cones.size()); ++i)
            dim_index_[cones[i]] = i;
    }

    // Sign calibration: the square-free monomial of the canonical first
    // maximal chain has degree +1.
    Chain chain = enumerate_max_chains(P, P.maximal_ids().front()).front();
    std::vector<std::vector<Rational>> phis;
    for (int s : chain) {
        std::vector<Rational> phi(P.set_count(), Rational(0));
        phi[s] = 1;
        phis.push_back(std::move(phi));
    }
    std::vector<const std::vector<Rational>*> view;
    for (const auto& p : phis) view.push_back(&p);
    Rational r = raw(view, {});
    if (r != 1 && r != -1)
        throw internal_error("degree calibration produced " + to_string(r) +
                             " for a chain monomial");
    calibration_ = r;
}

Rational DegreeEngine::raw(const std::vector<const std::vector<Rational>*>& phis,
                           const DegreeOptions& opts) const {
    const Fan& fan = *fan_;
    const int n = fan.dim();
    if (static_cast<int>(phis.size()) != n)
        throw input_error("degree_product needs exactly n divisors");

    std::vector<Rational> w(fan.cones_of_dim(n).size(), Rational(1));
    for (int step = 0; step < n; ++step) {
        const int k = n - step;
        const auto& phi = *phis[step];
        const auto& upper = fan.cones_of_dim(k);
        const std::size_t m = fan.cones_of_dim(k - 1).size();

        std::vector<Rational> sum_phi(m, Rational(0));
        std::vector<RatVec> sum_u(m);
        std::vector<char> touched(m, 0);
        std::vector<int> touched_list;

        for (std::size_t i = 0; i < upper.size(); ++i) {
            if (w[i] == 0) continue;
            for (const auto& f : fan.facets_of(upper[i])) {
                int fi = dim_index_[f.facet];
                if (!touched[fi]) {
                    touched[fi] = 1;
                    sum_u[fi] = RatVec::Zero(fan.ambient_dim());
                    touched_list.push_back(fi);
                }
                sum_phi[fi] += w[i] * phi[f.dropped];
                sum_u[fi] += w[i] * rat_rays_[f.dropped];
            }
        }

        std::vector<Rational> w_next(m, Rational(0));
        for (int fi : touched_list) {
            int tau = fan.cones_of_dim(k - 1)[fi];
            const Chain& chain = fan.chain_of(tau);
            auto lambda = fan.span_coefficients(chain, sum_u[fi]);
            if (!lambda)
                throw internal_error("intermediate cycle is unbalanced at a face");
            Rational phi_tau(0);
            for (std::size_t j = 0; j < chain.size(); ++j)
                phi_tau += (*lambda)(static_cast<Eigen::Index>(j)) * phi[chain[j]];
            w_next[fi] = sum_phi[fi] - phi_tau;
        }
        w = std::move(w_next);

        if (opts.on_intermediate) {
            WeightedCycle cycle;
            cycle.dim = k - 1;
            const auto& lower = fan.cones_of_dim(k - 1);
            for (std::size_t i = 0; i < m; ++i)
                if (w[i] != 0) cycle.weights.emplace(fan.chain_of(lower[i]), w[i]);
            opts.on_intermediate(cycle);
        }
    }
    return w[0];
}

Rational DegreeEngine::degree(const std::vector<Divisor>& divisors,
                              const DegreeOptions& opts) const {
    const Poset& P = fan_->poset();
    std::vector<std::vector<Rational>> tables;
    tables.reserve(divisors.size());
    for (const auto& d : divisors) {
        if (d.poset->ground() != P.ground())
            throw input_error("divisor defined over a different ground set");
        tables.push_back(dense_x_coefficients(d));
    }
    return degree_x(tables, opts);
}

Rational DegreeEngine::degree_x(const std::vector<std::vector<Rational>>& xcoeffs,
                                const DegreeOptions& opts) const {
    std::vector<const std::vector<Rational>*> view;
    view.reserve(xcoeffs.size());
    for (const auto& t : xcoeffs) view.push_back(&t);
    return degree_tables(view, opts);
}

Rational DegreeEngine::degree_tables(const std::vector<const std::vector<Rational>*>& xcoeffs,
                                     const DegreeOptions& opts) const {
    for (const auto* t : xcoeffs)
        if (static_cast<int>(t->size()) != fan_->poset().set_count())
            throw input_error("X-coefficient table has wrong size");
    return raw(xcoeffs, opts) * calibration_;
}

Rational degree_product(const Fan& fan, const std::vector<Divisor>& divisors,
                        const DegreeOptions& opts) {
    return DegreeEngine(fan).degree(divisors, opts);
}

TransversalIdentityReport verify_transversal_identity(const DegreeEngine& engine,
                                                       const std::vector<int>& sets) {
    const Poset& P = engine.fan().poset();
    std::vector<Divisor> hs;
    hs.reserve(sets.size());
    for (int s : sets)
        hs.push_back(generator_divisor(engine.fan().poset_ptr(), Basis::H, s));
    TransversalIdentityReport report;
    report.degree = engine.degree(hs);
    report.transversal = transversal_count(P, sets);
    report.equal = report.degree == Rational(report.transversal);
    return report;
}

} // namespace colorfan
