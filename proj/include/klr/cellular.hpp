#pragma once

#include "klr/dimension.hpp"
#include "klr/engine.hpp"

namespace klr {

/// Crossing word swapping two adjacent height-b blocks (local indices
/// 1..2b-1): (psi_b..psi_{2b-1})(psi_{b-1}..psi_{2b-2})...(psi_1..psi_b).
std::vector<int> psi_alpha_seq(int b);

/// The block swap psi_alpha in R_{2 alpha}; ctx2 must be the context of
/// 2 alpha.
Element psi_alpha(const Context& ctx2);

/// Natural embedding of a product of parabolic factors, evaluated on
/// generators and multiplied in the big algebra.
Element iota(const Context& big, const std::vector<std::pair<RootVector, Element>>& parts);

/// The datum (y_pi, psi_pi, e_pi, i_pi) of one root partition, with its
/// invariants checked at construction.
struct CellDatum {
    RootPartition pi;
    int i_pi = 0;                   // word index
    long sh = 0;
    std::vector<int> psi_seq;       // global crossing word of psi_pi
    std::vector<int32_t> y_dots;    // global exponent vector of y_pi
    Element psi_pi;                 // full element
    Element y_pi;                   // full element
    Element e_pi;
    bool e_pi_exactly_idempotent = false;  // recorded observation
};

CellDatum cell_datum(const Context& ctx, const RootPartition& pi);

/// Homogeneous basis of Lambda_pi at grading degree n, as dot polynomials
/// on the block variables y_{k,s}, with printable labels.
struct LambdaBasis {
    std::vector<Poly> polys;
    std::vector<std::string> labels;
};
LambdaBasis lambda_pi_basis(const Context& ctx, const RootPartition& pi, long n);
std::vector<Element> lambda_pi_elements(const Context& ctx, const RootPartition& pi, long n);

/// One spanning element psi_w y_pi b e_pi psi_v^tau of I'_pi.
struct CellRow {
    int w = 0, v = 0;       // indices into min_coset_reps(pi)
    std::string b_label;
    Element elt;
};

/// All degree-n spanning elements of I'_pi.
std::vector<CellRow> cell_rows(const Context& ctx, const CellDatum& cd, long n);

/// Degree-n component of I'_pi as a lattice in PBW coordinates.
Lattice cell_component(const Context& ctx, const CellDatum& cd, long n);

/// Degree-n component of sum over sigma of R e(i_sigma) R, spanned by the
/// normal forms of psi_w y^m e(i_sigma) psi_v^tau.
Lattice two_sided_ideal_component(const Context& ctx, const std::vector<RootPartition>& sigmas,
                                  long n);

/// Theorem-by-theorem verification suites; each returns one result per
/// (check, pi, degree).
std::vector<CheckResult> verify_cell_chain(const Context& ctx, long N, int threads = 1);
std::vector<CheckResult> verify_cellular_basis(const Context& ctx, long N, int threads = 1);
std::vector<CheckResult> verify_quotient_structure(const Context& ctx, long N, int threads = 1);
std::vector<CheckResult> verify_affine_cellularity(const Context& ctx, long N, int threads = 1);

/// Degree-n cellular basis across all root partitions with the change of
/// basis against the PBW monomials.
struct CellularBasisDump {
    std::vector<std::string> labels;
    std::vector<Element> elements;
    IntegerMatrix matrix;
    bool square = false;
    bool unimodular = false;
};
CellularBasisDump cellular_basis(const Context& ctx, long n);

}  // namespace klr
