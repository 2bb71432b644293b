#include "gerbecalc/cover.hpp"

#include "gerbecalc/cohomology.hpp"

#include <algorithm>
#include <set>

namespace gerbecalc {

Cover::Cover(ComplexPtr base, std::vector<std::string> names, std::vector<ComplexPtr> members)
    : base_(std::move(base)), names_(std::move(names)), members_(std::move(members))
{
    if (names_.size() != members_.size())
        throw CoverError("member name/complex count mismatch");
    if (members_.empty())
        throw CoverError("cover needs at least one member");
    for (const auto& m : members_) {
        if (m->total_count() == 0)
            throw CoverError("empty cover member");
        if (!m->is_subcomplex_of(*base_))
            throw CoverError("cover member is not a subcomplex of the base");
    }

    // membership sets; a simplex in no member means the cover is incomplete
    std::set<Simplex> nerve_facets;
    for (int p = 0; p <= base_->dim(); ++p)
        for (const auto& s : base_->simplices(p)) {
            std::vector<int> ms;
            for (int i = 0; i < size(); ++i)
                if (members_[i]->contains(s))
                    ms.push_back(i);
            if (ms.empty())
                throw CoverError("IncompleteCover: simplex lies in no member");
            nerve_facets.insert(Simplex(ms.begin(), ms.end()));
            membership_[s] = std::move(ms);
        }

    std::vector<int> verts(size());
    for (int i = 0; i < size(); ++i)
        verts[i] = i;
    nerve_ = std::make_shared<SimplicialComplex>(
        verts, std::vector<Simplex>(nerve_facets.begin(), nerve_facets.end()));
}

int Cover::member_by_name(const std::string& n) const
{
    for (int i = 0; i < size(); ++i)
        if (names_[i] == n)
            return i;
    return -1;
}

const std::vector<int>& Cover::membership(const Simplex& s) const
{
    auto it = membership_.find(s);
    if (it == membership_.end())
        throw CoverError("membership of a non-simplex requested");
    return it->second;
}

bool Cover::simplex_in_tuple(const Simplex& s, const Simplex& tuple) const
{
    const auto& ms = membership(s);
    return std::includes(ms.begin(), ms.end(), tuple.begin(), tuple.end());
}

ComplexPtr Cover::intersection(const Simplex& tuple) const
{
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = intersections_.find(tuple);
    if (it != intersections_.end())
        return it->second;

    std::vector<int> verts;
    std::vector<Simplex> facets;
    for (int p = 0; p <= base_->dim(); ++p)
        for (const auto& s : base_->simplices(p)) {
            if (!simplex_in_tuple(s, tuple))
                continue;
            if (p == 0)
                verts.push_back(s[0]);
            else
                facets.push_back(s);
        }
    auto c = std::make_shared<SimplicialComplex>(std::move(verts), facets);
    intersections_[tuple] = c;
    return c;
}

ComplexPtr cech_nerve(const ComplexPtr& base, const std::vector<std::string>& names,
                      const std::vector<ComplexPtr>& members)
{
    return Cover(base, names, members).nerve();
}

StarCover vertex_star_cover(const ComplexPtr& K)
{
    StarCover out;
    out.subdivision = barycentric_subdivision(*K);
    const auto& sd = out.subdivision;

    std::vector<std::string> names;
    std::vector<ComplexPtr> members;
    for (int v : K->vertices()) {
        // chains whose bottom simplex contains v; equivalently all of whose
        // simplices contain v (they are nested).
        std::vector<int> verts;
        std::vector<Simplex> facets;
        for (int p = 0; p <= sd.complex->dim(); ++p)
            for (const auto& chain : sd.complex->simplices(p)) {
                const Simplex& bottom = sd.vertex_simplex[chain.front()];
                if (!std::binary_search(bottom.begin(), bottom.end(), v))
                    continue;
                if (p == 0)
                    verts.push_back(chain[0]);
                else
                    facets.push_back(chain);
            }
        names.push_back(std::to_string(v));
        members.push_back(std::make_shared<SimplicialComplex>(std::move(verts), facets));
    }
    out.cover = std::make_shared<Cover>(sd.complex, std::move(names), std::move(members));

    // psi_v(barycenter of sigma) = 1/|sigma| when v in sigma
    auto Q = CoeffGroup::rationals();
    for (size_t m = 0; m < K->vertices().size(); ++m) {
        int v = K->vertices()[m];
        Cochain psi(sd.complex, 0, Q);
        for (int w = 0; w < static_cast<int>(sd.vertex_simplex.size()); ++w) {
            const Simplex& s = sd.vertex_simplex[w];
            if (std::binary_search(s.begin(), s.end(), v))
                psi.set({w}, Rat(1) / Rat(static_cast<int>(s.size())));
        }
        out.partition.push_back(std::move(psi));
    }
    return out;
}

std::string check_partition(const Cover& cover, const std::vector<Cochain>& psi)
{
    if (static_cast<int>(psi.size()) != cover.size())
        return "BadPartition: one weight cochain per member required";
    for (const auto& c : psi)
        if (c.degree() != 0 || c.complex() != cover.base())
            return "BadPartition: weights must be 0-cochains on the base";
    const auto& base = *cover.base();
    for (const auto& vs : base.simplices(0)) {
        Rat total = 0;
        for (const auto& c : psi)
            total += c.value(vs);
        if (total != 1)
            return "BadPartition: weights sum to " + rational_to_string(total) +
                   " at vertex " + std::to_string(vs[0]);
    }
    for (int p = 0; p <= base.dim(); ++p)
        for (const auto& s : base.simplices(p)) {
            Simplex front = {s.front()};
            for (int i = 0; i < cover.size(); ++i) {
                if (psi[i].value(front) == 0)
                    continue;
                if (!cover.member(i)->contains(s))
                    return "BadPartition: member " + cover.member_name(i) +
                           " weighted at the front vertex of a simplex outside it";
            }
        }
    return "";
}

GoodnessReport cover_goodness(const Cover& cover, int max_degree)
{
    GoodnessReport rep;
    auto Z = CoeffGroup::integers();
    const auto& nerve = *cover.nerve();
    for (int p = 0; p <= nerve.dim(); ++p)
        for (const auto& tuple : nerve.simplices(p)) {
            auto inter = cover.intersection(tuple);
            auto h0 = cohomology(inter, 0, Z);
            if (h0.free_rank != 1 || !h0.torsion.empty()) {
                rep.good = false;
                rep.failures.push_back("intersection not connected");
                continue;
            }
            for (int q = 1; q <= std::min(max_degree, inter->dim()); ++q) {
                auto hq = cohomology(inter, q, Z);
                if (hq.free_rank != 0 || !hq.torsion.empty()) {
                    rep.good = false;
                    rep.failures.push_back("intersection has cohomology in degree " +
                                           std::to_string(q));
                }
            }
        }
    return rep;
}

} // namespace gerbecalc
