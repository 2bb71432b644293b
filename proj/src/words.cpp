#include "gerbecalc/words.hpp"

#include <algorithm>
#include <sstream>

namespace gerbecalc {

namespace {

void check_raw_times(const std::vector<Rat>& times, size_t letter_count)
{
    if (times.size() != letter_count)
        throw WordError("MalformedWord: times/letters length mismatch");
    for (const auto& t : times)
        if (t < 0 || t > 1)
            throw WordError("MalformedWord: time outside [0,1]");
    for (size_t i = 0; i + 1 < times.size(); ++i)
        if (times[i] > times[i + 1])
            throw WordError("MalformedWord: times not weakly increasing");
}

std::string times_string(const std::vector<Rat>& times)
{
    std::string s;
    for (size_t i = 0; i < times.size(); ++i) {
        if (i)
            s += ",";
        s += rational_to_string(times[i]);
    }
    return s;
}

std::string letters_string(const FiniteGroup& G, const std::vector<int>& letters)
{
    std::string s = "[";
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i)
            s += "|";
        s += G.element_name(letters[i]);
    }
    return s + "]";
}

} // namespace

EGWord EGWord::normalized(GroupPtr G, std::vector<Rat> times, int base,
                          std::vector<int> letters)
{
    check_raw_times(times, letters.size());
    EGWord w(std::move(G));
    w.base_ = base;
    const FiniteGroup& grp = *w.group_;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < letters.size(); ++i) {
            if (times[i] == 0) {
                w.base_ = grp.mul(w.base_, letters[i]);
                times.erase(times.begin() + i);
                letters.erase(letters.begin() + i);
                changed = true;
                break;
            }
            if (times[i] == 1 || letters[i] == grp.identity()) {
                times.erase(times.begin() + i);
                letters.erase(letters.begin() + i);
                changed = true;
                break;
            }
            if (i + 1 < letters.size() && times[i] == times[i + 1]) {
                letters[i] = grp.mul(letters[i], letters[i + 1]);
                times.erase(times.begin() + i + 1);
                letters.erase(letters.begin() + i + 1);
                changed = true;
                break;
            }
        }
    }
    w.times_ = std::move(times);
    w.letters_ = std::move(letters);
    return w;
}

bool EGWord::operator==(const EGWord& o) const
{
    return group_ == o.group_ && times_ == o.times_ && base_ == o.base_ &&
           letters_ == o.letters_;
}

std::string EGWord::to_string() const
{
    return "|" + times_string(times_) + (times_.empty() ? "" : ", ") +
           group_->element_name(base_) + letters_string(*group_, letters_) + "|";
}

BGWord BGWord::normalized(GroupPtr G, std::vector<Rat> times, std::vector<int> letters)
{
    check_raw_times(times, letters.size());
    BGWord w(std::move(G));
    const FiniteGroup& grp = *w.group_;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < letters.size(); ++i) {
            if (times[i] == 0 || times[i] == 1 || letters[i] == grp.identity()) {
                times.erase(times.begin() + i);
                letters.erase(letters.begin() + i);
                changed = true;
                break;
            }
            if (i + 1 < letters.size() && times[i] == times[i + 1]) {
                letters[i] = grp.mul(letters[i], letters[i + 1]);
                times.erase(times.begin() + i + 1);
                letters.erase(letters.begin() + i + 1);
                changed = true;
                break;
            }
        }
    }
    w.times_ = std::move(times);
    w.letters_ = std::move(letters);
    return w;
}

bool BGWord::operator==(const BGWord& o) const
{
    return group_ == o.group_ && times_ == o.times_ && letters_ == o.letters_;
}

std::string BGWord::to_string() const
{
    return "|" + times_string(times_) + (times_.empty() ? "" : ", ") +
           letters_string(*group_, letters_) + "|";
}

void StepFunction::normalize()
{
    for (size_t i = 0; i + 1 < values.size();) {
        if (values[i] == values[i + 1]) {
            values.erase(values.begin() + i + 1);
            breaks.erase(breaks.begin() + i);
        } else {
            ++i;
        }
    }
}

StepFunction to_step(const EGWord& w)
{
    StepFunction f{w.group(), w.times(), {}};
    f.values.reserve(w.length() + 1);
    int cur = w.base();
    f.values.push_back(cur);
    for (int h : w.letters()) {
        cur = w.group()->mul(cur, h);
        f.values.push_back(cur);
    }
    return f;
}

EGWord from_step(const StepFunction& f)
{
    std::vector<int> letters(f.breaks.size());
    for (size_t i = 0; i < f.breaks.size(); ++i)
        letters[i] = f.group->mul(f.group->inv(f.values[i]), f.values[i + 1]);
    return EGWord::normalized(f.group, f.breaks, f.values.front(), letters);
}

StepFunction step_multiply(const StepFunction& a, const StepFunction& b)
{
    if (a.group != b.group)
        throw WordError("Mismatch: step functions over different groups");
    std::vector<Rat> breaks;
    std::merge(a.breaks.begin(), a.breaks.end(), b.breaks.begin(), b.breaks.end(),
               std::back_inserter(breaks));
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    // value of f on the interval ending at breaks[i] (or 1 for the last)
    auto value_at = [](const StepFunction& f, const Rat& left) {
        size_t k = 0;
        while (k < f.breaks.size() && f.breaks[k] <= left)
            ++k;
        return f.values[k];
    };
    StepFunction out{a.group, breaks, {}};
    out.values.resize(breaks.size() + 1);
    for (size_t i = 0; i <= breaks.size(); ++i) {
        Rat left = (i == 0) ? Rat(0) : breaks[i - 1];
        out.values[i] = a.group->mul(value_at(a, left), value_at(b, left));
    }
    out.normalize();
    return out;
}

StepFunction step_inverse(const StepFunction& a)
{
    StepFunction out = a;
    for (auto& v : out.values)
        v = a.group->inv(v);
    return out;
}

EGWord eg_mul(const EGWord& a, const EGWord& b)
{
    if (a.group() != b.group())
        throw WordError("Mismatch: words over different groups");
    const FiniteGroup& G = *a.group();

    // stable merge: left-factor letters precede right-factor letters on ties
    struct Entry {
        Rat time;
        bool from_b;
        int letter;
    };
    std::vector<Entry> merged;
    {
        size_t i = 0, j = 0;
        while (i < a.times().size() || j < b.times().size()) {
            bool take_a = j >= b.times().size() ||
                          (i < a.times().size() && a.times()[i] <= b.times()[j]);
            if (take_a) {
                merged.push_back({a.times()[i], false, a.letters()[i]});
                ++i;
            } else {
                merged.push_back({b.times()[j], true, b.letters()[j]});
                ++j;
            }
        }
    }

    std::vector<Rat> times;
    std::vector<int> letters;
    int running = b.base(); // the right factor's value before the current time
    for (const auto& e : merged) {
        times.push_back(e.time);
        if (e.from_b) {
            letters.push_back(e.letter);
            running = G.mul(running, e.letter);
        } else {
            int conj = G.mul(G.mul(G.inv(running), e.letter), running);
            letters.push_back(conj);
        }
    }
    return EGWord::normalized(a.group(), std::move(times), G.mul(a.base(), b.base()),
                              std::move(letters));
}

EGWord eg_inv(const EGWord& a)
{
    // The printed inverse formula is not usable as stated; the step-function
    // model is the ground truth here.
    return from_step(step_inverse(to_step(a)));
}

BGWord bg_mul(const BGWord& a, const BGWord& b)
{
    if (a.group() != b.group())
        throw WordError("Mismatch: words over different groups");
    if (!a.group()->abelian())
        throw WordError("RequiresAbelian: BG is a group only for abelian G");
    std::vector<Rat> times;
    std::vector<int> letters;
    size_t i = 0, j = 0;
    while (i < a.times().size() || j < b.times().size()) {
        bool take_a =
            j >= b.times().size() || (i < a.times().size() && a.times()[i] <= b.times()[j]);
        if (take_a) {
            times.push_back(a.times()[i]);
            letters.push_back(a.letters()[i]);
            ++i;
        } else {
            times.push_back(b.times()[j]);
            letters.push_back(b.letters()[j]);
            ++j;
        }
    }
    return BGWord::normalized(a.group(), std::move(times), std::move(letters));
}

BGWord bg_inv(const BGWord& a)
{
    if (!a.group()->abelian())
        throw WordError("RequiresAbelian: BG is a group only for abelian G");
    std::vector<int> letters(a.letters().size());
    for (size_t i = 0; i < letters.size(); ++i)
        letters[i] = a.group()->inv(a.letters()[i]);
    return BGWord::normalized(a.group(), a.times(), std::move(letters));
}

BGWord project_p(const EGWord& a)
{
    return BGWord::normalized(a.group(), a.times(), a.letters());
}

EGWord section_s(const BGWord& b)
{
    if (!b.group()->abelian())
        throw WordError("RequiresAbelian: the section is defined for abelian groups");
    return EGWord::normalized(b.group(), b.times(), b.group()->identity(), b.letters());
}

EGWord embed_base(GroupPtr G, int g) { return EGWord::normalized(std::move(G), {}, g, {}); }

// --- classifying construction -------------------------------------------------

namespace {

// alternating evaluation of a group-valued 2-cochain at arbitrary indices
int cocycle_at(const FiniteGroup& G, const std::map<Simplex, int>& g, int i, int j, int k)
{
    std::vector<int> idx = {i, j, k};
    int sign = 1;
    for (size_t a = 0; a < idx.size(); ++a)
        for (size_t b = a + 1; b < idx.size(); ++b) {
            if (idx[a] == idx[b])
                return G.identity();
            if (idx[a] > idx[b])
                sign = -sign;
        }
    std::sort(idx.begin(), idx.end());
    auto it = g.find(idx);
    int v = (it == g.end()) ? G.identity() : it->second;
    return sign > 0 ? v : G.inv(v);
}

} // namespace

ClassifyResult classify_cocycle(const ComplexPtr& nerve, const GroupPtr& G,
                                const std::map<Simplex, int>& cocycle,
                                const std::vector<WeightedSample>& samples)
{
    if (!G->abelian())
        throw WordError("RequiresAbelian: the classifying construction needs abelian G");
    for (const auto& [t, v] : cocycle) {
        if (t.size() != 3 || !nerve->contains(t))
            throw WordError("cocycle value on a non-2-simplex of the nerve");
        if (v < 0 || v >= G->order())
            throw WordError("cocycle value out of group range");
    }
    // the multiplicative 2-cocycle condition on every nerve 3-simplex
    for (const auto& q : nerve->simplices(3)) {
        int acc = G->identity();
        for (int j = 0; j < 4; ++j) {
            int v = cocycle_at(*G, cocycle, face_of(q, j)[0], face_of(q, j)[1],
                               face_of(q, j)[2]);
            acc = G->mul(acc, (j % 2 == 0) ? v : G->inv(v));
        }
        if (acc != G->identity())
            throw WordError("NotClosed: the 2-cocycle condition fails");
    }

    ClassifyResult out;
    for (const auto& sample : samples) {
        if (!nerve->contains(sample.support))
            throw WordError("BadSupport: sample support is not a nerve simplex");
        if (sample.weights.size() != sample.support.size())
            throw WordError("BadSupport: one weight per support index required");
        Rat total = 0;
        for (const auto& w : sample.weights) {
            if (w <= 0)
                throw WordError("BadSupport: weights must be strictly positive");
            total += w;
        }
        if (total != 1)
            throw WordError("BadSupport: weights must sum to one");

        const auto& I = sample.support;
        int n = static_cast<int>(I.size()) - 1;
        std::vector<Rat> psi(n); // cumulative times psi_1..psi_n
        {
            Rat acc = 0;
            for (int r = 0; r < n; ++r) {
                acc += sample.weights[r];
                psi[r] = acc;
            }
        }

        ClassifySampleResult sr;
        for (size_t ii = 0; ii < I.size(); ++ii)
            for (size_t jj = ii + 1; jj < I.size(); ++jj) {
                int i = I[ii], j = I[jj];
                std::vector<int> letters(n);
                for (int r = 0; r < n; ++r) {
                    int prev = cocycle_at(*G, cocycle, i, j, I[r]);
                    int next = cocycle_at(*G, cocycle, i, j, I[r + 1]);
                    letters[r] = G->mul(G->inv(prev), next);
                }
                BGWord w = BGWord::normalized(G, psi, letters);
                EGWord l = EGWord::normalized(G, psi, cocycle_at(*G, cocycle, i, j, I[0]),
                                              letters);
                sr.pairs.emplace(std::piecewise_construct, std::forward_as_tuple(i, j),
                                 std::forward_as_tuple(std::move(w), std::move(l)));
            }

        for (size_t ii = 0; ii < I.size(); ++ii)
            for (size_t jj = ii + 1; jj < I.size(); ++jj)
                for (size_t kk = jj + 1; kk < I.size(); ++kk) {
                    int i = I[ii], j = I[jj], k = I[kk];
                    const auto& gij = sr.pairs.at({i, j});
                    const auto& gik = sr.pairs.at({i, k});
                    const auto& gjk = sr.pairs.at({j, k});
                    BGWord prod = bg_mul(bg_mul(gjk.word, bg_inv(gik.word)), gij.word);
                    if (!prod.is_point()) {
                        sr.cocycle_ok = false;
                        sr.failures.push_back("1-cocycle fails on (" + std::to_string(i) +
                                              "," + std::to_string(j) + "," +
                                              std::to_string(k) + ")");
                    }
                    EGWord lift = eg_mul(eg_mul(gjk.lift, eg_inv(gik.lift)), gij.lift);
                    EGWord expected = embed_base(G, cocycle_at(*G, cocycle, i, j, k));
                    if (!(lift == expected)) {
                        sr.lift_ok = false;
                        sr.failures.push_back("lifted coboundary fails on (" +
                                              std::to_string(i) + "," + std::to_string(j) +
                                              "," + std::to_string(k) + ")");
                    }
                }
        out.all_ok = out.all_ok && sr.cocycle_ok && sr.lift_ok;
        out.samples.push_back(std::move(sr));
    }
    return out;
}

} // namespace gerbecalc
