// SPDX-License-Identifier: MIT
#ifndef HYPCONE_HILBERT_HPP
#define HYPCONE_HILBERT_HPP

#include <array>
#include <complex>
#include <map>
#include <vector>

#include "hypcone/fine.hpp"
#include "hypcone/graph.hpp"
#include "hypcone/partition.hpp"

namespace hypcone {

/** Finitely supported function on vertices (sorted support for
 *  deterministic iteration). */
using FinSupp = std::map<int, std::complex<double>>;
/** Integer-valued variant for the exact arithmetic paths. */
using FinSuppInt = std::map<int, long long>;

/** ||f||^2 = sum_n (n+1)^2 sum_{k<=n} sum_i |sum_{a in I_i^{n,k}} f(a)|^2
 *  over the classes of idx.  Throws SupportOutsideIndex when the support
 *  leaves B(x, max_n). */
double h_norm_sq(const ClassIndex& idx, const FinSupp& f);
long long h_norm_sq_exact(const ClassIndex& idx, const FinSuppInt& f);

/** Coordinates (n+1) * (class sum of f), flattened over the classes of idx
 *  in (n, k, class) enumeration order; the map is an isometry onto its
 *  image. */
std::vector<std::complex<double>> theta(const ClassIndex& idx, const FinSupp& f);
std::vector<long long> theta_exact(const ClassIndex& idx, const FinSuppInt& f);

/** sum_a f(a); satisfies |phi(f)|^2 <= (sum 1/(n+1)^2) * h_norm_sq(f). */
std::complex<double> phi(const FinSupp& f);

/** Identifies class `pos` within idx.at(n, k). */
struct ClassRef {
    int n = 0;
    int k = 0;
    int pos = 0;

    bool operator==(const ClassRef& o) const { return n == o.n && k == o.k && pos == o.pos; }
    bool operator<(const ClassRef& o) const {
        if (n != o.n) return n < o.n;
        if (k != o.k) return k < o.k;
        return pos < o.pos;
    }
};

/** Decomposition of one class at x into classes at x': the indicator of the
 *  target equals the sum of positive indicators minus the negative ones. */
struct SignedDecomposition {
    int x = 0;
    int xprime = 0;
    ClassRef target;                  // class within the index at x
    std::vector<ClassRef> positives;  // classes within the index at x'
    std::vector<ClassRef> negatives;
    int max_nprime = 0;               // largest sphere radius touched at x'
    bool clamped = false;             // some k' was clamped to n'
    bool fallback = false;            // constructive cases failed; laminar set algebra used
    bool positives_disjoint = true;   // soft diagnostic (identity is the hard check)
    std::array<int, 5> case_count{};  // members handled per case 1..4; [0] = fallback
};

/** Tree-exact decomposition driven by the unique min-distance point z and
 *  the geodesic [x, x'].  Throws NotATree on a non-tree,
 *  DecompositionMismatch if the verified indicator identity fails. */
SignedDecomposition decompose_class_tree(const Graph& tree, const ClassIndex& idx_x,
                                         const ClassIndex& idx_xprime, const SphereClass& c);

/** General decomposition via normal triangles and angle geometry, verified
 *  member-by-member; falls back to pure laminar set algebra (flagged) when
 *  the constructive cases miss. */
SignedDecomposition decompose_class_general(const Graph& g, const DeletedMetric& dm, int delta,
                                            const ClassIndex& idx_x, const ClassIndex& idx_xprime,
                                            const SphereClass& c);

/** Sparse signed change-of-basepoint matrix in theta coordinates; entry
 *  values are the exact rationals sign * (n+1)/(n'+1), accumulated. */
struct BasepointMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<ClassRef> row_classes;  // classes of the x index, n <= max_n_rows
    std::vector<ClassRef> col_classes;  // classes of the x' index
    struct Entry {
        int row = 0;
        int col = 0;
        long long num = 0;  // value = num / den, den = n' + 1 of the column
        long long den = 1;
        double value = 0.0;
    };
    std::vector<Entry> entries;  // sorted by (row, col)
};

/** Assemble the matrix from one decomposition per row class (rows: classes
 *  of idx_x with n <= max_n_rows).  Throws IncompleteCover when a row class
 *  has no decomposition. */
BasepointMatrix basepoint_matrix(const ClassIndex& idx_x, const ClassIndex& idx_xprime,
                                 const std::vector<SignedDecomposition>& decompositions,
                                 int max_n_rows);

/** A * v in exact integer arithmetic for integer theta vectors (every
 *  column denominator divides its coordinate). */
std::vector<long long> apply_exact(const BasepointMatrix& m, const ClassIndex& idx_xprime,
                                   const FinSuppInt& f);
std::vector<std::complex<double>> apply(const BasepointMatrix& m,
                                        const std::vector<std::complex<double>>& v);

/** Theta coordinates restricted to the rows of m (for exact identity
 *  checks A . theta_{x'} = theta_x). */
std::vector<long long> theta_rows_exact(const BasepointMatrix& m, const ClassIndex& idx_x,
                                        const FinSuppInt& f);

/** Largest singular value by power iteration on m^T m with a seeded
 *  deterministic start vector; throws NonConvergence past the iteration
 *  cap. */
double operator_norm(const BasepointMatrix& m, double tol = 1e-8);

/** L = max over (n, k) and vertices z of the number of classes at (n, k)
 *  whose min-distance point set contains z. */
int measure_L(const ClassIndex& idx);

/** K = L * max_e |Cone_{224 delta}(e)|, the decomposition-counting constant
 *  (measured, not assumed). */
int measure_K(const Graph& g, const DeletedMetric& dm, int delta, int L);

} // namespace hypcone

#endif // HYPCONE_HILBERT_HPP
