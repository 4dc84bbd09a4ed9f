#include "colorfan/geometry.hpp"

#include "colorfan/lp.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace colorfan {

namespace {

int exact_rank(RatMat m) {
    int rank = 0;
    const int rows = static_cast<int>(m.rows());
    const int cols = static_cast<int>(m.cols());
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows && piv < 0; ++r)
            if (m(r, col) != 0) piv = r;
        if (piv < 0) continue;
        m.row(piv).swap(m.row(rank));
        for (int r = rank + 1; r < rows; ++r) {
            Rational f = m(r, col);
            if (f != 0) m.row(r) -= (f / m(rank, col)) * m.row(rank);
        }
        ++rank;
    }
    return rank;
}

std::optional<RatVec> solve_square(RatMat a, RatVec b) {
    const int n = static_cast<int>(a.rows());
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n && piv < 0; ++r)
            if (a(r, col) != 0) piv = r;
        if (piv < 0) return std::nullopt;
        a.row(piv).swap(a.row(col));
        std::swap(b(piv), b(col));
        for (int r = col + 1; r < n; ++r) {
            Rational f = a(r, col) / a(col, col);
            if (f != 0) {
                a.row(r) -= f * a.row(col);
                b(r) -= f * b(col);
            }
        }
    }
    RatVec x = RatVec::Zero(n);
    for (int r = n - 1; r >= 0; --r) {
        Rational s = b(r);
        for (int c = r + 1; c < n; ++c) s -= a(r, c) * x(c);
        x(r) = s / a(r, r);
    }
    return x;
}

Rational exact_det(RatMat m) {
    const int n = static_cast<int>(m.rows());
    Rational det(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n && piv < 0; ++r)
            if (m(r, col) != 0) piv = r;
        if (piv < 0) return Rational(0);
        if (piv != col) {
            m.row(piv).swap(m.row(col));
            det = -det;
        }
        det *= m(col, col);
        for (int r = col + 1; r < n; ++r) {
            Rational f = m(r, col) / m(col, col);
            if (f != 0) m.row(r) -= f * m.row(col);
        }
    }
    return det;
}

bool satisfies(const ExactPolytope& p, const RatVec& x) {
    for (int i = 0; i < p.A.rows(); ++i)
        if (p.A.row(i).dot(x) > p.b(i)) return false;
    return true;
}

std::vector<RatVec> sort_unique(std::vector<RatVec> pts) {
    auto less = [](const RatVec& a, const RatVec& b) {
        for (int i = 0; i < a.size(); ++i) {
            if (a(i) < b(i)) return true;
            if (a(i) > b(i)) return false;
        }
        return false;
    };
    std::sort(pts.begin(), pts.end(), less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

bool is_bounded(const ExactPolytope& p) {
    // Recession cone {d : A d <= 0} is trivial iff each coordinate has no
    // positive and no negative recession direction (tested inside a box).
    const int n = p.dim;
    RatMat A(p.A.rows() + 1, n);
    RatVec b = RatVec::Zero(p.A.rows() + 1);
    A.topRows(p.A.rows()) = p.A;
    for (int i = 0; i < n; ++i) {
        A.row(p.A.rows()).setZero();
        for (int sign : {1, -1}) {
            A(p.A.rows(), i) = sign;
            b(p.A.rows()) = 1;
            RatVec c = RatVec::Zero(n);
            c(i) = sign;
            LpResult r = lp_max(A, b, c);
            if (r.status != LpStatus::Optimal || r.value > 0) return false;
        }
    }
    return true;
}

} // namespace

ExactPolytope from_hrep(RatMat A, RatVec b) {
    if (A.rows() != b.size()) throw input_error("H-rep rows and bounds differ in length");
    ExactPolytope p;
    p.dim = static_cast<int>(A.cols());
    p.A = std::move(A);
    p.b = std::move(b);
    return p;
}

ExactPolytope from_vrep(int dim, std::vector<RatVec> verts) {
    ExactPolytope p;
    p.dim = dim;
    p.verts = extreme_points(std::move(verts));
    return p;
}

std::vector<RatVec> vertex_enumeration(const ExactPolytope& p, bool assume_bounded) {
    if (p.verts) return *p.verts;
    const int n = p.dim;
    const int m = static_cast<int>(p.A.rows());
    if (m < n) {
        if (!assume_bounded && n > 0) throw input_error("unbounded polytope");
        return {};
    }
    if (!assume_bounded) {
        if (!lp_feasible(p.A, p.b)) return {};
        if (!is_bounded(p)) throw input_error("unbounded polytope");
    }

    std::vector<RatVec> found;
    std::vector<int> rows(n);
    std::iota(rows.begin(), rows.end(), 0);
    RatMat sub(n, n);
    RatVec rhs(n);
    for (;;) {
        for (int i = 0; i < n; ++i) {
            sub.row(i) = p.A.row(rows[i]);
            rhs(i) = p.b(rows[i]);
        }
        if (auto x = solve_square(sub, rhs); x && satisfies(p, *x))
            found.push_back(std::move(*x));
        int i = n - 1;
        while (i >= 0 && rows[i] == m - n + i) --i;
        if (i < 0) break;
        ++rows[i];
        for (int j = i + 1; j < n; ++j) rows[j] = rows[j - 1] + 1;
    }
    return sort_unique(std::move(found));
}

void ensure_vertices(ExactPolytope& p, bool assume_bounded) {
    if (!p.verts) p.verts = vertex_enumeration(p, assume_bounded);
}

std::vector<RatVec> extreme_points(std::vector<RatVec> points) {
    points = sort_unique(std::move(points));
    if (points.size() <= 1) return points;
    std::vector<RatVec> out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::vector<RatVec> others;
        others.reserve(points.size() - 1);
        for (std::size_t j = 0; j < points.size(); ++j)
            if (j != i) others.push_back(points[j]);
        if (!in_convex_hull(points[i], others)) out.push_back(points[i]);
    }
    return out;
}

int affine_dim(const std::vector<RatVec>& points) {
    if (points.empty()) return -1;
    const int n = static_cast<int>(points[0].size());
    RatMat diffs(static_cast<int>(points.size()) - 1, n);
    for (std::size_t i = 1; i < points.size(); ++i)
        diffs.row(static_cast<int>(i) - 1) = (points[i] - points[0]).transpose();
    return diffs.rows() == 0 ? 0 : exact_rank(std::move(diffs));
}

void ensure_hrep(ExactPolytope& p) {
    if (p.A.rows() > 0) return;
    if (!p.verts) throw input_error("polytope has neither H-rep nor V-rep");
    const auto& verts = *p.verts;
    const int n = p.dim;
    if (affine_dim(verts) < n)
        throw input_error("facet recovery needs a full-dimensional vertex set");

    // Candidate hyperplanes through n affinely independent vertices; keep
    // those supporting the whole set, canonically scaled, deduped.
    std::set<std::pair<std::vector<Rational>, Rational>> seen;
    std::vector<RatVec> rows_out;
    std::vector<Rational> b_out;
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    const int k = static_cast<int>(verts.size());
    for (;;) {
        // normal = nullspace of the (n-1) x n difference matrix
        RatMat diffs(n - 1, n);
        for (int i = 1; i < n; ++i)
            diffs.row(i - 1) = (verts[idx[i]] - verts[idx[0]]).transpose();
        // eliminate
        RatMat m = diffs;
        std::vector<int> pivot_col;
        int rank = 0;
        for (int col = 0; col < n && rank < m.rows(); ++col) {
            int piv = -1;
            for (int r = rank; r < m.rows() && piv < 0; ++r)
                if (m(r, col) != 0) piv = r;
            if (piv < 0) continue;
            m.row(piv).swap(m.row(rank));
            for (int r = 0; r < m.rows(); ++r) {
                if (r == rank || m(r, col) == 0) continue;
                m.row(r) -= (m(r, col) / m(rank, col)) * m.row(rank);
            }
            pivot_col.push_back(col);
            ++rank;
        }
        if (rank == n - 1) {
            int free_col = 0;
            while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end())
                ++free_col;
            RatVec normal = RatVec::Zero(n);
            normal(free_col) = 1;
            for (int r = rank - 1; r >= 0; --r)
                normal(pivot_col[r]) = -m(r, free_col) / m(r, pivot_col[r]);
            Rational offset = normal.dot(verts[idx[0]]);
            bool above = false, below = false;
            for (const auto& v : verts) {
                Rational s = normal.dot(v) - offset;
                if (s > 0) above = true;
                if (s < 0) below = true;
            }
            if (!(above && below)) {
                if (above) {
                    normal = -normal;
                    offset = -offset;
                }
                int fz = 0;
                while (normal(fz) == 0) ++fz;
                Rational scale = abs(normal(fz));
                normal /= scale;
                offset /= scale;
                std::vector<Rational> key(normal.data(), normal.data() + n);
                if (seen.emplace(std::move(key), offset).second) {
                    rows_out.push_back(normal);
                    b_out.push_back(offset);
                }
            }
        }
        int i = n - 1;
        while (i >= 0 && idx[i] == k - n + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }
    p.A = RatMat(static_cast<int>(rows_out.size()), n);
    p.b = RatVec(static_cast<int>(rows_out.size()));
    for (std::size_t i = 0; i < rows_out.size(); ++i) {
        p.A.row(static_cast<int>(i)) = rows_out[i].transpose();
        p.b(static_cast<int>(i)) = b_out[i];
    }
}

namespace {

// Fans the face over its first vertex and recurses over the boundary faces
// cut out by the tight rows; emits index (d+1)-tuples.
void triangulate_face(const std::vector<RatVec>& verts,
                      const std::vector<std::vector<char>>& tight, int rows,
                      const std::vector<int>& face, int d,
                      std::vector<std::vector<int>>& out) {
    if (static_cast<int>(face.size()) == d + 1) {
        out.push_back(face);
        return;
    }
    const int v0 = face[0];
    std::set<std::vector<int>> children;
    for (int r = 0; r < rows; ++r) {
        std::vector<int> child;
        for (int v : face)
            if (tight[v][r]) child.push_back(v);
        if (child.empty() || child.size() == face.size()) continue;
        if (std::find(child.begin(), child.end(), v0) != child.end()) continue;
        std::sort(child.begin(), child.end());
        children.insert(std::move(child));
    }
    bool found = false;
    for (const auto& child : children) {
        std::vector<RatVec> pts;
        for (int v : child) pts.push_back(verts[v]);
        if (affine_dim(pts) != d - 1) continue;
        found = true;
        std::vector<std::vector<int>> sub;
        triangulate_face(verts, tight, rows, child, d - 1, sub);
        for (auto& s : sub) {
            s.push_back(v0);
            out.push_back(std::move(s));
        }
    }
    if (!found)
        throw internal_error("face has no opposite facet; triangulation failed");
}

Rational volume_from(const ExactPolytope& poly, const std::vector<RatVec>& verts, int base) {
    const int n = poly.dim;
    std::vector<std::vector<char>> tight(verts.size(),
                                         std::vector<char>(poly.A.rows(), 0));
    for (std::size_t v = 0; v < verts.size(); ++v)
        for (int r = 0; r < poly.A.rows(); ++r)
            tight[v][r] = poly.A.row(r).dot(verts[v]) == poly.b(r);

    std::vector<int> face;
    face.push_back(base);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i)
        if (i != base) face.push_back(i);

    std::vector<std::vector<int>> simplices;
    triangulate_face(verts, tight, static_cast<int>(poly.A.rows()), face, n, simplices);
    if (simplices.empty())
        throw internal_error("triangulation produced no simplices");

    Rational total(0);
    RatMat edges(n, n);
    for (const auto& s : simplices) {
        for (int i = 0; i < n; ++i)
            edges.row(i) = (verts[s[i + 1]] - verts[s[0]]).transpose();
        total += abs(exact_det(edges));
    }
    return total;
}

} // namespace

Rational normalized_volume(const ExactPolytope& p) {
    return normalized_volume_from_base(p, 0);
}

Rational normalized_volume_from_base(const ExactPolytope& p, int base_vertex) {
    ExactPolytope poly = p;
    ensure_vertices(poly);
    const auto& verts = *poly.verts;
    if (static_cast<int>(verts.size()) < poly.dim + 1) return Rational(0);
    if (affine_dim(verts) < poly.dim) return Rational(0);
    ensure_hrep(poly);
    if (base_vertex < 0 || base_vertex >= static_cast<int>(verts.size()))
        throw input_error("base vertex out of range");
    return volume_from(poly, verts, base_vertex);
}

bool polytope_equal(const ExactPolytope& p, const ExactPolytope& q) {
    ExactPolytope a = p, b = q;
    ensure_vertices(a);
    ensure_vertices(b);
    if (*a.verts != *b.verts) return false;
    for (const auto& v : *a.verts)
        if (!satisfies(b, v)) return false;
    for (const auto& v : *b.verts)
        if (!satisfies(a, v)) return false;
    return true;
}

ExactPolytope independence_polytope(const RestrictedRank& r) {
    const int n = r.n();
    const unsigned full = 1u << n;
    RatMat A(n + static_cast<int>(full) - 1, n);
    RatVec b(A.rows());
    A.setZero();
    for (int i = 0; i < n; ++i) {
        A(i, i) = -1;
        b(i) = 0;
    }
    for (unsigned mask = 1; mask < full; ++mask) {
        int row = n + static_cast<int>(mask) - 1;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) A(row, i) = 1;
        b(row) = r.by_mask[mask];
    }
    ExactPolytope p = from_hrep(std::move(A), std::move(b));

    if (satisfies_matroid_axioms(r)) {
        // Edmonds greedy: every vertex is a prefix-greedy vector of some
        // ordering of a subset of the ground set.
        std::vector<RatVec> cand;
        std::vector<int> seq;
        std::vector<char> used(n, 0);
        RatVec cur = RatVec::Zero(n);
        auto rec = [&](auto&& self, unsigned mask, const Rational&) -> void {
            cand.push_back(cur);
            for (int i = 0; i < n; ++i) {
                if (used[i]) continue;
                unsigned next = mask | (1u << i);
                Rational inc = r.by_mask[next] - r.by_mask[mask];
                used[i] = 1;
                cur(i) = inc;
                self(self, next, inc);
                cur(i) = 0;
                used[i] = 0;
            }
        };
        rec(rec, 0, Rational(0));
        for (const auto& v : cand)
            if (!satisfies(p, v))
                throw internal_error("greedy vertex escapes the independence polytope");
        // Each greedy vector is the unique solution of n independent tight
        // valid constraints (prefix rows plus zero coordinates), hence a
        // vertex outright; dedupe is all that is needed.
        p.verts = sort_unique(std::move(cand));
    } else {
        ensure_vertices(p, /*assume_bounded=*/true);
    }
    return p;
}

OrthantComplex independence_complex(const RankFunction& rk) {
    OrthantComplex out;
    for (int t : rk.poset->maximal_ids())
        out.emplace(t, independence_polytope(restrict(rk, t)));
    return out;
}

Rational ipc_volume(const RankFunction& rk) {
    Rational total(0);
    for (int t : rk.poset->maximal_ids())
        total += normalized_volume(independence_polytope(restrict(rk, t)));
    return total;
}

bool sdr_exists(const std::vector<std::uint32_t>& masks, int n) {
    std::vector<int> match(n, -1);
    auto augment = [&](auto&& self, int i, std::uint32_t& seen) -> bool {
        for (int j = 0; j < n; ++j) {
            if (!(masks[i] & (1u << j)) || (seen & (1u << j))) continue;
            seen |= 1u << j;
            if (match[j] == -1 || self(self, match[j], seen)) {
                match[j] = i;
                return true;
            }
        }
        return false;
    };
    for (std::size_t i = 0; i < masks.size(); ++i) {
        std::uint32_t seen = 0;
        if (!augment(augment, static_cast<int>(i), seen)) return false;
    }
    return true;
}

Rational orthant_volume_via_transversals(const RankFunction& rk, int maximal_id) {
    const Poset& P = *rk.poset;
    const int n = P.n();
    Divisor d = divisor_of(rk);
    auto aT = restrict_to_boolean(d, maximal_id);
    // to masks over the elements of T (block order)
    auto blocks = underlying_blocks(P, maximal_id);
    std::vector<std::pair<std::uint32_t, Rational>> coeff;
    for (const auto& [sid, a] : aT) {
        std::uint32_t mask = 0;
        const auto& slots = P.slots(sid);
        for (int i = 0; i < n; ++i)
            if (slots[blocks[i]] != -1) mask |= 1u << i;
        coeff.emplace_back(mask, a);
    }
    // ordered tuples over the support
    Rational total(0);
    std::vector<std::uint32_t> pick(n);
    auto rec = [&](auto&& self, int depth, Rational prod) -> void {
        if (depth == n) {
            if (sdr_exists(pick, n)) total += prod;
            return;
        }
        for (const auto& [mask, a] : coeff) {
            pick[depth] = mask;
            self(self, depth + 1, prod * a);
        }
    };
    rec(rec, 0, Rational(1));
    return total;
}

Rational ipc_volume_via_transversals(const RankFunction& rk, int budget_n) {
    const Poset& P = *rk.poset;
    if (P.n() > budget_n)
        throw input_error("transversal expansion budget exceeded (n = " +
                          std::to_string(P.n()) + " > " + std::to_string(budget_n) +
                          "); use the triangulation route");
    Rational total(0);
    for (int t : P.maximal_ids()) total += orthant_volume_via_transversals(rk, t);
    return total;
}

ExactPolytope simplex_polytope(int dim, std::uint32_t mask, const Rational& scale) {
    std::vector<RatVec> verts{RatVec::Zero(dim)};
    for (int i = 0; i < dim; ++i)
        if (mask & (1u << i)) {
            RatVec v = RatVec::Zero(dim);
            v(i) = scale;
            verts.push_back(std::move(v));
        }
    return from_vrep(dim, std::move(verts));
}

ExactPolytope minkowski_sum(const std::vector<ExactPolytope>& parts) {
    if (parts.empty()) throw input_error("empty Minkowski sum");
    const int dim = parts[0].dim;
    std::vector<RatVec> acc{RatVec::Zero(dim)};
    for (const auto& part : parts) {
        if (part.dim != dim) throw input_error("Minkowski sum over mismatched ambients");
        ExactPolytope q = part;
        ensure_vertices(q);
        std::vector<RatVec> next;
        next.reserve(acc.size() * q.verts->size());
        for (const auto& a : acc)
            for (const auto& v : *q.verts) next.push_back(a + v);
        acc = extreme_points(std::move(next));
    }
    return from_vrep(dim, std::move(acc));
}

namespace {

// H-representation of sum_{j in J} Delta_{S_j}: the polymatroid of the
// coverage rank X -> #{j : S_j ∩ X != 0}.
Rational simplex_sum_volume(int n, const std::vector<std::uint32_t>& masks) {
    RestrictedRank cover;
    cover.element_blocks.resize(n);
    std::iota(cover.element_blocks.begin(), cover.element_blocks.end(), 0);
    cover.by_mask.resize(std::size_t(1) << n);
    for (unsigned x = 0; x < (1u << n); ++x) {
        int c = 0;
        for (auto m : masks)
            if (m & x) ++c;
        cover.by_mask[x] = c;
    }
    return normalized_volume(independence_polytope(cover));
}

} // namespace

Rational mixed_volume_simplices(int n, const std::vector<std::uint32_t>& masks) {
    if (static_cast<int>(masks.size()) != n)
        throw input_error("mixed volume needs exactly n simplices");
    for (auto m : masks)
        if (m == 0 || m >= (1u << n)) throw input_error("bad simplex support");

    Rational matching_route(sdr_exists(masks, n) ? 1 : 0);

    Rational incl_excl(0);
    for (unsigned j = 1; j < (1u << n); ++j) {
        std::vector<std::uint32_t> subset;
        for (int i = 0; i < n; ++i)
            if (j & (1u << i)) subset.push_back(masks[i]);
        Rational vol = simplex_sum_volume(n, subset);
        int sign = (n - static_cast<int>(subset.size())) % 2 == 0 ? 1 : -1;
        incl_excl += sign * vol;
    }
    // Vol_T is n! times Euclidean volume, while the alternating sum of
    // Euclidean volumes equals n! times the mixed volume; the two factors
    // cancel to a single division here.
    Rational fact(1);
    for (int i = 2; i <= n; ++i) fact *= i;
    incl_excl /= fact;
    if (matching_route != incl_excl)
        throw internal_error("mixed volume routes disagree: matching " +
                             to_string(matching_route) + " vs inclusion-exclusion " +
                             to_string(incl_excl));
    return matching_route;
}

ExactPolytope normal_complex_piece(const Divisor& d, const Chain& max_chain) {
    const Poset& P = *d.poset;
    const int n = P.n();
    if (static_cast<int>(max_chain.size()) != n)
        throw input_error("normal_complex_piece needs a maximal chain");
    for (int k = 0; k < n; ++k)
        if (P.size_of(max_chain[k]) != k + 1 ||
            (k > 0 && !P.subset(max_chain[k - 1], max_chain[k])))
            throw input_error("normal_complex_piece needs a maximal chain");

    Divisor x = convert(d, Basis::X);
    for (const auto& [id, c] : x.coeffs)
        if (c < 0) throw input_error("normal complex needs nonnegative X-coefficients");
    auto coeff = [&](int id) {
        auto it = x.coeffs.find(id);
        return it == x.coeffs.end() ? Rational(0) : it->second;
    };

    const int top = max_chain[n - 1];
    auto blocks = underlying_blocks(P, top); // coordinate order of the orthant
    auto coord_of_block = [&](int b) {
        return static_cast<int>(std::find(blocks.begin(), blocks.end(), b) - blocks.begin());
    };
    // j_k: the coordinate entering at chain step k
    std::vector<int> entering(n);
    for (int k = 0; k < n; ++k) {
        const auto& cur = P.slots(max_chain[k]);
        const int* prev = k > 0 ? P.slots(max_chain[k - 1]).data() : nullptr;
        for (int b = 0; b < P.n(); ++b)
            if (cur[b] != -1 && (!prev || prev[b] == -1)) entering[k] = coord_of_block(b);
    }

    RatMat A(2 * n, n);
    RatVec b(2 * n);
    A.setZero();
    b.setZero();
    // cone rows: x_{j_1} >= x_{j_2} >= ... >= x_{j_n} >= 0
    for (int k = 0; k + 1 < n; ++k) {
        A(k, entering[k + 1]) = 1;
        A(k, entering[k]) = -1;
    }
    A(n - 1, entering[n - 1]) = -1;
    // cut rows: sum over S_k <= c(S_k)
    for (int k = 0; k < n; ++k) {
        for (int l = 0; l <= k; ++l) A(n + k, entering[l]) = 1;
        b(n + k) = coeff(max_chain[k]);
    }
    return from_hrep(std::move(A), std::move(b));
}

NormalComplexReport normal_complex_equals_ipc(const RankFunction& rk, bool force) {
    const Poset& P = *rk.poset;
    auto cub = cubicality(rk);
    if (cub.verdict == Cubicality::NotPseudoCubical && !force)
        throw input_error("hypothesis violated: rank function is not pseudo-cubical (" +
                          cub.detail + ")");

    Divisor d = divisor_of(rk);
    NormalComplexReport report;
    for (int t : P.maximal_ids()) {
        ExactPolytope ip = independence_polytope(restrict(rk, t));
        ensure_vertices(ip, true);

        Rational piece_volume_sum(0);
        std::vector<RatVec> piece_verts;
        for (const Chain& chain : enumerate_max_chains(P, t)) {
            ExactPolytope piece = normal_complex_piece(d, chain);
            ensure_vertices(piece, true);

            // The globally-cut polytope is piece ∩ {rank rows}, always
            // contained in the piece; equality holds exactly when every
            // piece vertex already satisfies every rank row of the orthant.
            for (const auto& v : *piece.verts)
                if (!satisfies(ip, v)) {
                    report.pieces_globally_cut = false;
                    report.equal = false;
                    if (report.detail.empty())
                        report.detail = "piece is not cut out by the global rank rows";
                }
            piece_volume_sum += normalized_volume(piece);
            piece_verts.insert(piece_verts.end(), piece.verts->begin(), piece.verts->end());
        }

        if (piece_volume_sum != normalized_volume(ip)) {
            report.equal = false;
            if (report.detail.empty())
                report.detail = "piece volumes do not sum to the orthant volume";
        }
        // With each piece inside IP, the union matches IP exactly when
        // every vertex of IP shows up among the piece vertices.
        auto cloud = sort_unique(std::move(piece_verts));
        auto less = [](const RatVec& a, const RatVec& b) {
            for (int i = 0; i < a.size(); ++i) {
                if (a(i) < b(i)) return true;
                if (a(i) > b(i)) return false;
            }
            return false;
        };
        for (const auto& v : *ip.verts)
            if (!std::binary_search(cloud.begin(), cloud.end(), v, less)) {
                report.equal = false;
                if (report.detail.empty())
                    report.detail = "an independence-polytope vertex is not covered by a piece";
            }
    }
    return report;
}

} // namespace colorfan
