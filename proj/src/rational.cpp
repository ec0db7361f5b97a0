#include "rational.hpp"

#include <cctype>

namespace ydc {

void fail(errc code, const std::string& msg) { throw Error(code, msg); }

namespace {

bool digits_only(const std::string& s, size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t i = from; i < to; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

bool valid_int(const std::string& s, size_t from, size_t to) {
    if (from < to && s[from] == '-') ++from;
    return digits_only(s, from, to);
}

}  // namespace

Rat parse_rat(const std::string& text) {
    size_t slash = text.find('/');
    bool ok;
    if (slash == std::string::npos) {
        ok = valid_int(text, 0, text.size());
    } else {
        ok = valid_int(text, 0, slash) && valid_int(text, slash + 1, text.size());
    }
    if (!ok) fail(errc::invalid_input, "bad rational literal: '" + text + "'");
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
        fail(errc::invalid_input, "bad rational literal: '" + text + "'");
    if (r.get_den() == 0) fail(errc::invalid_input, "zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

std::string format_rat(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double to_double(const Rat& r) { return r.get_d(); }

Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

Rat rat_pow(const Rat& r, int k) {
    Rat acc(1);
    Rat base = r;
    int e = k;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

}  // namespace ydc
