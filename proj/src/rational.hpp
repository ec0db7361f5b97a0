#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ydc {

using Rat = mpq_class;
using Int = mpz_class;

enum class errc {
    invalid_input,
    limit_exceeded,
    internal,  // a structural self-check failed; not the caller's fault
};

// Thrown for anything the caller could have caused; carries the coarse code
// the C API and the CLI map to exit statuses.
class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] void fail(errc code, const std::string& msg);

// Accepts "p" or "p/q", base 10, optional leading '-'. Rejects q == 0.
Rat parse_rat(const std::string& text);

// Canonical form "p/q": lowest terms, q > 0, the "/q" always present.
std::string format_rat(const Rat& r);

double to_double(const Rat& r);

Rat rat_abs(const Rat& r);

// r^k for k >= 0.
Rat rat_pow(const Rat& r, int k);

}  // namespace ydc
