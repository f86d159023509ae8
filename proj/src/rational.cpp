#include "prehom/rational.hpp"

#include <cctype>
#include <ostream>

namespace prehom {

Rat Rat::from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Rat: empty string");
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw std::invalid_argument("Rat: bad character in \"" + std::string(s) + "\"");
    }
    mpq_class q;
    if (q.set_str(std::string(s), 10) != 0)
        throw std::invalid_argument("Rat: cannot parse \"" + std::string(s) + "\"");
    if (sgn(q.get_den()) == 0)
        throw std::invalid_argument("Rat: zero denominator in \"" + std::string(s) + "\"");
    q.canonicalize();
    return Rat(q);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace prehom
