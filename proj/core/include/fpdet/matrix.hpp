#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fpdet/field.hpp"
#include "fpdet/polyreduce.hpp"

namespace fpdet {

/// Matrix families, named by entry and index range:
///   dminus   : (i^2+cij+dj^2)^(p-2),      2 <= i,j <= p-2   (n = p-3)
///   dfull    : (i^2+cij+dj^2)^(p-2),      1 <= i,j <= p-1   (n = p-1)
///   leg      : legendre(i^2+cij+dj^2),    1 <= i,j <= p-1   (n = p-1)
///   legz     : legendre(i^2+cij+dj^2),    0 <= i,j <= p-1   (n = p)
///   recipsum : (i^2+j^2)^{-1},            1 <= i,j <= (p-1)/2
///   recipmix : (i^2-ij+j^2)^{-1},         1 <= i,j <= p-1
///   kernelP  : P(i*j^{-1}) from a ReducedPoly, 2 <= i,j <= p-2
enum class MatrixKind { dminus, dfull, leg, legz, recipsum, recipmix, kernelP };

std::string to_string(MatrixKind kind);
MatrixKind matrix_kind_from_string(const std::string& name);

struct FpMatrix {
    PrimeCtx ctx;
    std::size_t n = 0;
    MatrixKind kind = MatrixKind::dminus;
    QuadForm form;
    std::vector<Residue> entries;  // row-major, n*n

    Residue at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
    Residue& at(std::size_t i, std::size_t j) { return entries[i * n + j]; }
};

/// Build any entry-formula family (everything except kernelP, which needs a
/// ReducedPoly; see build_kernel_matrix). Legendre entries are stored as
/// canonical residues (-1 -> p-1). Reciprocal builders throw
/// ZeroDenominatorError when an entry's denominator vanishes.
FpMatrix build_matrix(MatrixKind kind, const PrimeCtx& ctx, QuadForm form);

/// [P(i*j^{-1})] over 2 <= i,j <= p-2 for the supplied reduced polynomial.
FpMatrix build_kernel_matrix(const ReducedPoly& poly);

/// Determinant mod p by Gaussian elimination: first nonzero pivot in the
/// current column, row-swap sign tracking, 0 for singular matrices.
Residue det_mod(const PrimeCtx& ctx, std::size_t n, std::vector<Residue> entries);
Residue det_mod(const FpMatrix& m);

/// Plain-text dump: first line "p n kind c d", then n rows of n residues.
void dump_matrix(const FpMatrix& m, std::ostream& os);

}  // namespace fpdet
