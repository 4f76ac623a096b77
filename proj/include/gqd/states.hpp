#pragma once

// Example states, random ensembles and the text state-file format.
//
// Computational basis labels are zero-based: the kets |1>, |2>, |3> of a qutrit
// written in one-based physics notation are indices 0, 1, 2 here.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <random>

#include "gqd/density_matrix.hpp"

namespace gqd {

using Engine = std::mt19937_64;

/// Deterministic engine for (seed, stream); distinct streams give
/// independent sequences, so work split by stream index is reproducible in
/// any evaluation order.
Engine make_engine(std::uint64_t seed, std::uint64_t stream = 0);

/// p |e><e| + (1 - p) I/9 with |e> = (|11> + |22> + |10> + |01> + |02> + |20>)/sqrt(6).
DensityMatrix eq52_state(double p);

/// p |e1><e1| + (1 - p) |e2><e2| with |e1> = (|00> + |11>)/2 + |22>/sqrt(2)
/// and |e2> the ket of eq52_state.
DensityMatrix eq53_state(double p);

/// p |Phi+><Phi+| + (1 - p) I/4
DensityMatrix werner_qubit(double p);
DensityMatrix bell_state();
DensityMatrix product_state(const DensityMatrix& a, const DensityMatrix& b);

/// W W^dag / tr(W W^dag) with W a dim x rank matrix of standard complex
/// Gaussians drawn from make_engine(seed).
DensityMatrix random_state(Index dim, Index rank, std::uint64_t seed);
DensityMatrix random_bipartite_state(Index m, Index n, Index rank, std::uint64_t seed);

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the phases
/// of R's diagonal moved into Q.
ComplexMatrix random_unitary(Index dim, Engine& engine);

/// Text format: first non-comment line "m n", then (mn)^2 lines "i j re im"
/// in row-major order. '#' starts a comment. Numbers are written in shortest
/// round-trip form, so write/read reproduces every bit.
void write_state(const DensityMatrix& rho, std::ostream& out);
void write_state(const DensityMatrix& rho, const std::filesystem::path& path);

/// Throws ParseError (with line number) on malformed input and
/// ValidationError on a well-formed matrix that is not a state.
DensityMatrix read_state(std::istream& in);
DensityMatrix read_state(const std::filesystem::path& path);

}  // namespace gqd
