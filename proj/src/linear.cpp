#include "opforge/linear.hpp"

#include <cctype>

namespace opforge {

Scalar parse_scalar(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    if (t.empty()) throw std::invalid_argument("empty scalar");
    if (t[0] == '+') t.erase(0, 1);
    std::size_t slash = t.find('/');
    auto valid_int = [](const std::string& s) {
        std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!valid_int(t)) throw std::invalid_argument("bad scalar '" + text + "'");
        return Scalar(mpz_class(t));
    }
    std::string num = t.substr(0, slash), den = t.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-')
        throw std::invalid_argument("bad scalar '" + text + "'");
    mpz_class d(den);
    if (d == 0) throw std::invalid_argument("zero denominator");
    Scalar q(mpz_class(num), d);
    q.canonicalize();
    return q;
}

std::string format_scalar(const Scalar& s) {
    if (s.get_den() == 1) return s.get_num().get_str();
    return s.get_num().get_str() + "/" + s.get_den().get_str();
}

}  // namespace opforge
