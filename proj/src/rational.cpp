#include "ncomplex/rational.hpp"

#include <cctype>

#include "ncomplex/errors.hpp"

namespace ncx {

Q parse_q(const std::string& s) {
    // strict syntax: -?digits(/digits)?  (sign only on the numerator)
    auto bad = [&]() { throw precondition_error("malformed rational: \"" + s + "\""); };
    if (s.empty()) bad();
    size_t i = 0;
    if (s[i] == '-') ++i;
    size_t num_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == num_start) bad();
    if (i < s.size()) {
        if (s[i] != '/') bad();
        ++i;
        size_t den_start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == den_start || i != s.size()) bad();
    }
    Q q;
    if (q.set_str(s, 10) != 0) bad();
    if (q.get_den() == 0) throw precondition_error("zero denominator in rational: \"" + s + "\"");
    q.canonicalize();
    return q;
}

std::string q_str(const Q& q) {
    return q.get_str();
}

}  // namespace ncx
