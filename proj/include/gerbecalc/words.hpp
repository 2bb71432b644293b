#ifndef GERBECALC_WORDS_HPP
#define GERBECALC_WORDS_HPP

#include "gerbecalc/group.hpp"
#include "gerbecalc/rational.hpp"
#include "gerbecalc/simplicial.hpp"

#include <map>
#include <vector>

namespace gerbecalc {

struct WordError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Normalized word |t_1,...,t_p, h_0[h_1|...|h_p]|: strictly increasing
// rational times in (0,1), no identity letters.  Raw input is rewritten to
// this normal form: a time 0 absorbs its letter into the base, a time 1
// drops its letter, identity letters are deleted, equal adjacent times merge
// their letters by multiplication.
class EGWord {
public:
    static EGWord normalized(GroupPtr G, std::vector<Rat> times, int base,
                             std::vector<int> letters);
    static EGWord identity(GroupPtr G) { return normalized(std::move(G), {}, 0, {}); }

    const GroupPtr& group() const { return group_; }
    const std::vector<Rat>& times() const { return times_; }
    int base() const { return base_; }
    const std::vector<int>& letters() const { return letters_; }
    int length() const { return static_cast<int>(letters_.size()); }
    bool is_identity() const { return letters_.empty() && base_ == group_->identity(); }

    bool operator==(const EGWord& o) const;
    std::string to_string() const;

private:
    EGWord(GroupPtr G) : group_(std::move(G)), base_(group_->identity()) {}
    GroupPtr group_;
    std::vector<Rat> times_;
    int base_;
    std::vector<int> letters_;
};

// As EGWord without the base letter; times 0 and 1 both drop their letters.
class BGWord {
public:
    static BGWord normalized(GroupPtr G, std::vector<Rat> times, std::vector<int> letters);
    static BGWord point(GroupPtr G) { return normalized(std::move(G), {}, {}); }

    const GroupPtr& group() const { return group_; }
    const std::vector<Rat>& times() const { return times_; }
    const std::vector<int>& letters() const { return letters_; }
    bool is_point() const { return letters_.empty(); }

    bool operator==(const BGWord& o) const;
    std::string to_string() const;

private:
    BGWord(GroupPtr G) : group_(std::move(G)) {}
    GroupPtr group_;
    std::vector<Rat> times_;
    std::vector<int> letters_;
};

// Step functions on [0,1]: value values_[i] on (breaks_[i], breaks_[i+1]]
// with breaks_ strictly increasing inside (0,1) and adjacent values distinct.
// This is the semantic model of EG; the group law is pointwise multiplication.
struct StepFunction {
    GroupPtr group;
    std::vector<Rat> breaks;
    std::vector<int> values; // size = breaks.size() + 1

    void normalize(); // merge equal adjacent values
};

StepFunction to_step(const EGWord& w);
EGWord from_step(const StepFunction& f);
StepFunction step_multiply(const StepFunction& a, const StepFunction& b);
StepFunction step_inverse(const StepFunction& a);

// The displayed group law: merge the times, pass the right factor's letters
// through, conjugate the left factor's letters by the right factor's running
// value.  Agrees with the step-function oracle (tested); ties are resolved by
// the merge relation.
EGWord eg_mul(const EGWord& a, const EGWord& b);
// Inverse through the step-function model (pointwise inverse).
EGWord eg_inv(const EGWord& a);

// Abelian-only operations; RequiresAbelian otherwise.
BGWord bg_mul(const BGWord& a, const BGWord& b);
BGWord bg_inv(const BGWord& a);

BGWord project_p(const EGWord& a);   // drop the base letter
EGWord section_s(const BGWord& b);   // base 1; a homomorphism for abelian G
EGWord embed_base(GroupPtr G, int g); // i : G -> EG, constant word

// --- classifying construction -------------------------------------------------

// A sample point: a nerve simplex of member indices with strictly positive
// rational weights summing to one.
struct WeightedSample {
    Simplex support;
    std::vector<Rat> weights;
};

struct ClassifyPairData {
    BGWord word;    // g_ij at this sample
    EGWord lift;    // ghat_ij at this sample
    ClassifyPairData(BGWord w, EGWord l) : word(std::move(w)), lift(std::move(l)) {}
};

struct ClassifySampleResult {
    std::map<std::pair<int, int>, ClassifyPairData> pairs;
    bool cocycle_ok = true; // g_jk g_ik^{-1} g_ij = point word on all triples
    bool lift_ok = true;    // ghat_jk ghat_ik^{-1} ghat_ij = i(g_ijk)
    std::vector<std::string> failures;
};

struct ClassifyResult {
    std::vector<ClassifySampleResult> samples;
    bool all_ok = true;
};

// The transition words g_ij and lifts ghat_ij built from the cumulative
// weights, with letters g_{ij i_{r-1}}^{-1} g_{ij i_r}; the report verifies
// the 1-cocycle condition and the lifted coboundary at every sample point.
// The 2-cocycle is given by its values on increasing nerve 2-simplices and
// evaluated with the alternating convention elsewhere.
ClassifyResult classify_cocycle(const ComplexPtr& nerve, const GroupPtr& G,
                                const std::map<Simplex, int>& cocycle,
                                const std::vector<WeightedSample>& samples);

} // namespace gerbecalc

#endif
