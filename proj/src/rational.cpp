#include "colorfan/rational.hpp"

namespace colorfan {

std::string to_string(const Rational& q) {
    return q.str();
}

std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto slash = text.find('/');
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    auto strip_plus = [](std::string s) {
        if (!s.empty() && s[0] == '+') s.erase(0, 1); // gmp rejects a leading '+'
        return s;
    };
    try {
        if (slash == std::string::npos) {
            if (!is_int(text)) return std::nullopt;
            return Rational(Integer(strip_plus(text)));
        }
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) return std::nullopt;
        Integer d(strip_plus(den));
        if (d == 0) return std::nullopt;
        return Rational(Integer(strip_plus(num)), d);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

RatVec to_rational(const LatVec& v) {
    RatVec out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = Rational(v(i));
    return out;
}

} // namespace colorfan
