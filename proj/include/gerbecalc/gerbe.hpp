#ifndef GERBECALC_GERBE_HPP
#define GERBECALC_GERBE_HPP

#include "gerbecalc/cech.hpp"
#include "gerbecalc/group.hpp"

namespace gerbecalc {

struct GerbeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bundle gerbe data relative to fixed reference trivializations: the product
// constants p_ijk per nerve 2-simplex and the section offsets s_ij per nerve
// 1-simplex, both in an abelian coefficient group.
struct GerbePresentation {
    CechCochain product;  // elements, Čech degree 2
    CechCochain sections; // elements, Čech degree 1

    GerbePresentation(CoverPtr cover, const CoeffGroup& coeff)
        : product(CechCochain::elements(cover, 2, coeff)),
          sections(CechCochain::elements(std::move(cover), 1, coeff))
    {
    }
};

// g_ijk = p_ijk + s_jk - s_ik + s_ij.  Throws NonAssociativeProduct (with a
// witness 3-simplex) unless delta p = 0.
CechCochain dd_cocycle(const GerbePresentation& P);

// A central extension of finite groups A -> Ghat -> G with a cyclic kernel
// and a set-level section table.  Everything is validated on construction.
class CentralExtensionData {
public:
    CentralExtensionData(GroupPtr ghat, GroupPtr g, std::vector<int> projection,
                         std::vector<int> kernel_elements, std::vector<int> section);

    const GroupPtr& ghat() const { return ghat_; }
    const GroupPtr& quotient() const { return g_; }
    int project(int x) const { return projection_[x]; }
    int section(int y) const { return section_[y]; }
    int kernel_order() const { return static_cast<int>(kernel_.size()); }
    // index in Cyclic(kernel_order) of a Ghat element lying in the kernel
    int kernel_index(int x) const;
    int kernel_element(int idx) const { return kernel_[idx]; }

    CentralExtensionData with_section(std::vector<int> section) const;
    // Z_n -> Z_n x G -> G with the canonical section (always split).
    static CentralExtensionData split(int n, const GroupPtr& g);
    // Z_n -> Z_{n*m} -> Z_m with the canonical section.
    static CentralExtensionData cyclic(int n, int m);

private:
    GroupPtr ghat_, g_;
    std::vector<int> projection_, kernel_, section_;
};

// The lifting obstruction: g_ijk = s(tau_jk) s(tau_ij) s(tau_ik)^{-1}, valued
// in the (central, cyclic) kernel.  tau is a G-valued Čech 1-cocycle given on
// nerve edges with tau_jk tau_ij = tau_ik (alternating convention elsewhere).
struct LiftingResult {
    CechCochain cocycle; // elements, degree 2, Cyclic(kernel order)
    bool class_is_zero = false;
    std::optional<CechObstruction> evidence;
};
LiftingResult lifting_gerbe_cocycle(const CoverPtr& cover, const CentralExtensionData& ext,
                                    const std::map<Simplex, int>& tau);

// --- Deligne triples ----------------------------------------------------------

// (g, A, f): the transition cocycle in Q/Z (or Cyclic(n), embedded as k/n),
// connection 1-forms on double overlaps, curvings on members.
struct DeligneTriple {
    CechCochain g; // elements, degree 2, Q/Z or Cyclic(n)
    CechCochain A; // forms, degree 1, inner degree 1, Rationals
    CechCochain f; // forms, degree 0, inner degree 2, Rationals

    DeligneTriple(CoverPtr cover, const CoeffGroup& gcoeff)
        : g(CechCochain::elements(cover, 2, gcoeff)),
          A(CechCochain::forms(cover, 1, 1, CoeffGroup::rationals())),
          f(CechCochain::forms(std::move(cover), 0, 2, CoeffGroup::rationals()))
    {
    }
    const CoverPtr& cover() const { return g.cover(); }
};

// The three validation conditions: (i) delta g = 0; (ii) per triple,
// (delta A) = d(lift g + n) for an integer 0-cochain n (the discrete dlog
// condition); (iii) delta f = d A.
struct DeligneReport {
    bool valid = true;
    std::vector<std::string> failures;
    std::optional<CechCochain> branches; // the solved n when (ii) holds
};
DeligneReport deligne_validate(const DeligneTriple& T);

struct CurvatureResult {
    Cochain omega;
    bool closed = false;
    bool integral = false;
};
// Glue df into the global 3-curvature; throws InvalidTriple when validation
// fails.
CurvatureResult three_curvature(const DeligneTriple& T);

// Čech end of the descent ladder: nu = delta(lift g + branches), an integer
// Čech 3-cocycle on the nerve.  This is the triple's integer class; for
// branch-free triples it is the classical connecting image of g.
struct DeligneClassData {
    CechCochain branches; // forms (2, 0), Integers
    CechCochain nu;       // elements, degree 3, Integers
};
DeligneClassData deligne_class_cocycle(const DeligneTriple& T);

// --- the open-cover curving pipeline -------------------------------------------

struct PipelineInput {
    CechCochain A;              // forms (2, 1) with delta A = 0
    CechCochain F;              // forms (1, 2) with delta F = d A
    std::vector<Cochain> psi;   // partition of unity (front-star supported)
};
struct PipelineResult {
    CechCochain B;    // forms (1, 1), delta B = A
    CechCochain Fhat; // forms (1, 2), delta Fhat = 0
    CechCochain mu;   // forms (0, 2), delta mu = Fhat
    Cochain omega;    // global 3-cochain glued from d mu
    std::vector<std::string> verified; // one line per equation (1)-(5)
    bool all_ok = true;
};
PipelineResult curving_pipeline(const PipelineInput& in);

// --- trivialization -------------------------------------------------------------

// h, k and the branch data E = lift(h) + m satisfying g = delta h,
// A = delta k + d E and f = d k exactly.  (The k-sign follows the quadruple
// system of equations; the printed triple variant is inconsistent with
// delta f = d A.)
struct DeligneTrivialization {
    CechCochain h;        // elements, degree 1, Q/Z
    CechCochain k;        // forms (0, 1), Rationals
    CechCochain branches; // forms (1, 0), Rationals: E = lift(h) + m
};
struct TrivializeObstruction {
    std::string stage; // "integer-class" | "torsion-class" | "curvature" | "flat-class"
    std::string description;
    std::optional<CechCochain> class_representative;
    std::optional<CechObstruction> functional;
    std::optional<Cochain> omega;
};
struct TrivializeResult {
    std::optional<DeligneTrivialization> trivialization;
    std::optional<TrivializeObstruction> obstruction;
    bool ok() const { return trivialization.has_value(); }
};
TrivializeResult trivialize_deligne(const DeligneTriple& T);

// --- exact constructions ---------------------------------------------------------

// Back-solve a triple whose integer class is a given closed integer Čech
// 3-cocycle on the nerve (g = 0, branches from the contracting homotopy).
DeligneTriple deligne_from_integer_class(const CoverPtr& cover, const CechCochain& nu);

// The Deligne coboundary of (h, k) with integer branch noise m:
// g = delta h, A = delta k + d(lift h + m), f = d k.
DeligneTriple deligne_coboundary(const CechCochain& h, const CechCochain& k,
                                 const CechCochain& m);

} // namespace gerbecalc

#endif
