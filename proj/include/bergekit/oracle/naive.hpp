#pragma once

#include <bergekit/bit_matrix.hpp>
#include <bergekit/containment.hpp>

namespace bergekit::oracle {

/// Containment by trying every injective row map and every injective column map.
/// Only for tiny inputs.
bool naive_contains(const BitMatrix& f, const BitMatrix& a, ContainMode mode);

/// Bh(m,F) by enumerating every subset of the 2^m possible columns (m <= 4).
int naive_bh(const BitMatrix& f, int m);

/// f(F,P) by enumerating every column subset of P (‖P‖ <= 20).
int naive_relative(const BitMatrix& f, const BitMatrix& p);

}  // namespace bergekit::oracle
