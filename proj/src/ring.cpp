#include "fsr/ring.hpp"

#include <algorithm>
#include <unordered_set>

#include "fsr/errors.hpp"

namespace fsr {

bool FacePrime::contains(const MonomialIdeal& a) const {
    return std::all_of(a.generators().begin(), a.generators().end(),
                       [&](const ExponentVector& g) { return g.support().intersects(variables); });
}

namespace {

class TransversalSearch {
public:
    explicit TransversalSearch(std::vector<VarSet> edges) : edges_(std::move(edges)) {}

    std::vector<VarSet> run() {
        descend(VarSet{});
        std::vector<VarSet> minimal;
        std::sort(found_.begin(), found_.end(), [](VarSet a, VarSet b) { return a.size() < b.size(); });
        for (auto t : found_) {
            const bool dominated =
                std::any_of(minimal.begin(), minimal.end(), [&](VarSet m) { return m.subset_of(t); });
            if (!dominated)
                minimal.push_back(t);
        }
        std::sort(minimal.begin(), minimal.end());
        return minimal;
    }

private:
    void descend(VarSet current) {
        if (!visited_.insert(current.bits()).second)
            return;
        if (std::any_of(found_.begin(), found_.end(), [&](VarSet t) { return t.subset_of(current); }))
            return;
        // Branch on the smallest edge not yet hit.
        const VarSet* branch = nullptr;
        for (const auto& e : edges_)
            if (!e.intersects(current) && (branch == nullptr || e.size() < branch->size()))
                branch = &e;
        if (branch == nullptr) {
            found_.push_back(current);
            return;
        }
        for (auto v : branch->indices())
            descend(current.with(v));
    }

    std::vector<VarSet> edges_;
    std::vector<VarSet> found_;
    std::unordered_set<std::uint64_t> visited_;
};

} // namespace

PrimeDecomposition minimal_primes(const MonomialIdeal& a) {
    if (!a.is_squarefree())
        throw PreconditionError("minimal_primes requires a squarefree monomial ideal");
    if (a.is_unit())
        throw PreconditionError("the unit ideal has no minimal primes");
    std::vector<VarSet> edges;
    edges.reserve(a.mu());
    for (const auto& g : a.generators())
        edges.push_back(g.support());
    PrimeDecomposition out;
    std::size_t min_size = a.ambient_n();
    for (auto t : TransversalSearch(std::move(edges)).run()) {
        min_size = std::min(min_size, t.size());
        out.primes.push_back(FacePrime{t});
    }
    out.dim = a.ambient_n() - min_size;
    return out;
}

MonomialIdeal restrict_to(const MonomialIdeal& a, VarSet keep) {
    const auto kept = keep.indices();
    std::vector<ExponentVector> gens;
    gens.reserve(a.mu());
    for (const auto& g : a.generators()) {
        ExponentVector r(kept.size());
        for (std::size_t j = 0; j < kept.size(); ++j)
            r[j] = g[kept[j]];
        gens.push_back(std::move(r));
    }
    return normalize(std::move(gens), kept.size());
}

MonomialIdeal image_mod_face_prime(const MonomialIdeal& a, const FacePrime& p) {
    const VarSet keep = VarSet::all(a.ambient_n()).minus(p.variables);
    std::vector<ExponentVector> survivors;
    for (const auto& g : a.generators())
        if (!g.support().intersects(p.variables))
            survivors.push_back(g);
    return restrict_to(normalize(std::move(survivors), a.ambient_n()), keep);
}

StanleyReisnerRing::StanleyReisnerRing(std::size_t n, std::uint64_t p, MonomialIdeal defining_ideal)
    : n_(n), p_(p), ideal_(std::move(defining_ideal)) {
    if (n > kMaxVariables)
        throw InputError("at most 64 variables are supported");
    if (!is_prime(p))
        throw InputError("characteristic " + std::to_string(p) + " is not prime");
    if (ideal_.ambient_n() != n)
        throw InputError("defining ideal does not live in the ambient ring");
    if (!ideal_.is_squarefree())
        throw InputError("Stanley-Reisner relations must be squarefree");
    if (ideal_.is_unit())
        throw InputError("defining ideal must be proper");
    primes_ = fsr::minimal_primes(ideal_);
}

MonomialIdeal StanleyReisnerRing::lift(const MonomialIdeal& a) const { return sum(a, ideal_); }

StanleyReisnerRing StanleyReisnerRing::quotient_by(const FacePrime& p) const {
    return StanleyReisnerRing(n_ - p.variables.size(), p_, MonomialIdeal::zero(n_ - p.variables.size()));
}

Localization localize_at_face_prime(const StanleyReisnerRing& r, const FacePrime& q,
                                    const std::vector<MonomialIdeal>& extras) {
    if (!q.variables.subset_of(VarSet::all(r.n())))
        throw InputError("face prime uses variables outside the ring");
    if (!q.contains(r.defining_ideal()))
        throw PreconditionError("localization prime does not contain the defining ideal");
    for (const auto& e : extras) {
        if (e.ambient_n() != r.n())
            throw InputError("ideal does not live in the ambient ring");
        if (!q.contains(e))
            throw PreconditionError("ideal is not contained in the localization prime");
    }
    Localization out{StanleyReisnerRing(q.variables.size(), r.p(), restrict_to(r.defining_ideal(), q.variables)),
                     {},
                     q.variables.indices()};
    out.extras.reserve(extras.size());
    for (const auto& e : extras)
        out.extras.push_back(restrict_to(e, q.variables));
    return out;
}

} // namespace fsr
