#ifndef PREHOM_CORPUS_HPP
#define PREHOM_CORPUS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "prehom/report.hpp"

namespace prehom {

struct ExpectedFraction {
    std::string numerator;        // in the entry's variables
    std::vector<unsigned> k;      // denominator exponents over the basics
};

struct CorpusExpectation {
    std::optional<bool> lfd;
    std::optional<int> r;
    std::optional<std::vector<unsigned>> degrees;  // sorted multiset
    std::optional<int> dim_a1;
    std::optional<int> dim_g;
    std::optional<int> dim_derived;
    std::optional<int> dim_h;
    std::vector<ExpectedFraction> fractions;  // matched up to scalar and
                                              // multiples of the denominator
};

struct CorpusEntry {
    std::string name;
    std::string description;
    std::function<InputTask()> build;  // null for comparison entries
    CorpusExpectation expect;
    std::function<void(const AnalysisReport&, std::vector<std::string>&)> extra;
    std::vector<std::string> pair;  // comparison entries reference two names
};

const std::vector<CorpusEntry>& corpus();
const CorpusEntry* corpus_find(const std::string& name);

struct CorpusResult {
    std::string name;
    bool pass = false;
    std::vector<std::string> failures;
    std::optional<AnalysisReport> report;
};

CorpusResult corpus_run_entry(const CorpusEntry& entry);

/// Corpus building blocks, exposed for tests and the acceptance suite.
LieAlgebraVF torus_algebra(int n);
LieAlgebraVF firstcol_algebra(int n);
LieAlgebraVF toeplitz_algebra(int n);
LieAlgebraVF lu_algebra(int n, int m);
LieAlgebraVF sym4_bordered_algebra();

/// Numerator of the i-th Toeplitz additive function with x_k in place of
/// the matrix entries (denominator x1^i).
MultiPoly toeplitz_phi_numerator(int n, int i);

/// The symbolic homomorphism identity for the i-th Toeplitz additive
/// function: expands phi_i(AB) - phi_i(A) - phi_i(B) over 2n symbolic
/// entries after clearing (a1 b1)^i and returns true iff it is the zero
/// polynomial.
bool toeplitz_homomorphism_identity(int n, int i);

/// Leading i x i minor det(M^(i)) of the n x m coordinate matrix.
MultiPoly lu_leading_minor(int n, int m, int i);
/// det((M with column i deleted)^(i)) - the numerator of the i-th
/// closed-form additive invariant.
MultiPoly lu_deleted_minor(int n, int m, int i);

}  // namespace prehom

#endif
