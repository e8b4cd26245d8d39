#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "curvetopo/error.hpp"

namespace curvetopo {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat_of(long n, long d = 1) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

// Parses "7", "-3/4", "0". Rejects anything else.
Rat parse_rat(const std::string& s);

std::string rat_str(const Rat& q);

// q^e for e >= 0, and negative e when q != 0.
Rat rat_pow(const Rat& q, long e);

double rat_double(const Rat& q);

bool rat_is_integer(const Rat& q);

// Nearest rational with denominator <= max_den recovered from a double by
// continued fractions; empty when no convergent reproduces x within tol.
std::optional<Rat> rat_reconstruct(double x, unsigned long max_den, double tol);

// Exact integer k-th root when it exists.
std::optional<Int> int_kth_root(const Int& n, int k);

// Exact rational k-th root when it exists (sign handled for odd k).
std::optional<Rat> rat_kth_root(const Rat& q, int k);

} // namespace curvetopo
