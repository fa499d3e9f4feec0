#include "cyc/lattice.hpp"

#include <algorithm>
#include <bit>

namespace cyc {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

u64 hash_words(std::span<const u64> w) {
    u64 h = 1469598103934665603ull; // FNV-1a over the mask words
    for (u64 x : w) {
        h ^= x;
        h *= 1099511628211ull;
    }
    return h;
}

bool test_bit(const u64* m, u32 x) { return (m[x >> 6] >> (x & 63)) & 1; }
void set_bit(u64* m, u32 x) { m[x >> 6] |= u64(1) << (x & 63); }

struct WorkBudget {
    u64 used = 0;
    u64 cap;
    explicit WorkBudget(u64 cap) : cap(cap) {}
    void charge(u64 n) {
        used += n;
        if (used > cap)
            throw resource_error("subgroup enumeration exceeded the work budget (" +
                                 std::to_string(cap) + " elementary ops)");
    }
};

// Greedy generating set: repeatedly adjoin the smallest element outside the
// closure so far. At most log2(N) generators.
std::vector<u32> generating_set(const CayleyGroup& g) {
    const u32 n = g.order;
    std::vector<bool> closed(n, false);
    closed[g.identity] = true;
    u32 closed_count = 1;
    std::vector<u32> gens, queue;
    while (closed_count < n) {
        u32 x = 0;
        while (closed[x]) ++x;
        gens.push_back(x);
        // BFS closure of <gens>
        queue.clear();
        for (u32 e = 0; e < n; ++e)
            if (closed[e]) queue.push_back(e);
        if (!closed[x]) {
            closed[x] = true;
            ++closed_count;
            queue.push_back(x);
        }
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            for (u32 q : gens) {
                u32 u = g.mul(queue[qi], q);
                if (!closed[u]) {
                    closed[u] = true;
                    ++closed_count;
                    queue.push_back(u);
                }
            }
        }
    }
    return gens;
}

} // namespace

SubgroupLattice enumerate_subgroups(const CayleyGroup& g, const OracleLimits& limits) {
    const u32 n = g.order;
    if (n > limits.max_order)
        throw resource_error("group order " + std::to_string(n) + " exceeds cap " +
                             std::to_string(limits.max_order));

    SubgroupLattice lat;
    lat.group_order_ = n;
    const std::size_t W = lat.words_ = (n + 63) / 64;

    WorkBudget budget(limits.max_work);
    std::vector<std::vector<u32>> gens; // generator chain per subgroup

    // Insert the mask staged at the end of the arena if it is new.
    // Returns its index, or nullopt if it was already present.
    auto insert_staged = [&](u32 order, std::vector<u32> sub_gens) -> std::optional<std::size_t> {
        const u64* w = lat.masks_.data() + lat.orders_.size() * W;
        u64 h = hash_words({w, W});
        auto& bucket = lat.index_[h];
        for (u32 id : bucket) {
            if (std::equal(w, w + W, lat.masks_.data() + std::size_t(id) * W)) {
                lat.masks_.resize(lat.orders_.size() * W); // discard duplicate
                return std::nullopt;
            }
        }
        std::size_t id = lat.orders_.size();
        if (id + 1 > limits.max_subgroups)
            throw resource_error("subgroup count exceeds cap (" +
                                 std::to_string(limits.max_subgroups) + ")");
        bucket.push_back(static_cast<u32>(id));
        lat.orders_.push_back(order);
        gens.push_back(std::move(sub_gens));
        return id;
    };

    // Phase 1: cyclic seeds <x> for every element.
    std::vector<u32> seed_gen; // one representative generator per distinct seed
    for (u32 x = 0; x < n; ++x) {
        lat.masks_.resize((lat.orders_.size() + 1) * W, 0);
        u64* w = lat.masks_.data() + lat.orders_.size() * W;
        u32 cur = g.identity, order = 0;
        do {
            set_bit(w, cur);
            cur = g.mul(cur, x);
            ++order;
        } while (cur != g.identity);
        budget.charge(order + W);
        std::vector<u32> sg;
        if (x != g.identity) sg.push_back(x);
        if (insert_staged(order, std::move(sg)) && x != g.identity) seed_gen.push_back(x);
    }
    lat.num_cyclic_ = lat.orders_.size();

    // Phase 2: join saturation. Processing order is deterministic.
    std::vector<u32> reps;
    for (std::size_t i = 0; i < lat.orders_.size(); ++i) {
        for (u32 gen : seed_gen) {
            const u64* hm = lat.masks_.data() + i * W;
            if (test_bit(hm, gen)) continue;

            // K = <H union {gen}>, filled coset-by-coset.
            const u32 h_order = lat.orders_[i];
            lat.masks_.resize((lat.orders_.size() + 1) * W);
            u64* km = lat.masks_.data() + lat.orders_.size() * W;
            hm = lat.masks_.data() + i * W; // re-resolve after resize
            std::copy(hm, hm + W, km);

            std::vector<u32> kgens = gens[i];
            kgens.push_back(gen);
            reps.assign(1, g.identity);
            for (std::size_t ri = 0; ri < reps.size(); ++ri) {
                for (u32 q : kgens) {
                    u32 u = g.mul(reps[ri], q);
                    if (test_bit(km, u)) continue;
                    // fill the right coset H*u by scanning H's mask
                    for (std::size_t wi = 0; wi < W; ++wi) {
                        u64 bits = hm[wi];
                        while (bits) {
                            u32 h = static_cast<u32>(wi * 64 + std::countr_zero(bits));
                            bits &= bits - 1;
                            set_bit(km, g.mul(h, u));
                        }
                    }
                    reps.push_back(u);
                }
            }
            u32 k_order = static_cast<u32>(h_order * reps.size());
            budget.charge(u64(k_order) + reps.size() * kgens.size() + 2 * W);
            insert_staged(k_order, std::move(kgens));
        }
    }

    // Normality flags. Conjugation-stability under a generating set of G is
    // equivalent to stability under all of G.
    lat.normal_.assign(lat.orders_.size(), true);
    if (g.abelian) {
        lat.num_normal_ = lat.orders_.size();
    } else {
        std::vector<u32> ggens = generating_set(g);
        lat.num_normal_ = 0;
        for (std::size_t i = 0; i < lat.orders_.size(); ++i) {
            const u64* m = lat.masks_.data() + i * W;
            bool normal = true;
            budget.charge(u64(lat.orders_[i]) * ggens.size());
            for (u32 cg : ggens) {
                for (std::size_t wi = 0; wi < W && normal; ++wi) {
                    u64 bits = m[wi];
                    while (bits) {
                        u32 h = static_cast<u32>(wi * 64 + std::countr_zero(bits));
                        bits &= bits - 1;
                        if (!test_bit(m, g.conj(cg, h))) {
                            normal = false;
                            break;
                        }
                    }
                }
                if (!normal) break;
            }
            lat.normal_[i] = normal;
            if (normal) ++lat.num_normal_;
        }
    }
    return lat;
}

std::vector<u32> SubgroupLattice::elements(std::size_t i) const {
    std::vector<u32> out;
    out.reserve(orders_[i]);
    auto m = mask(i);
    for (std::size_t wi = 0; wi < words_; ++wi) {
        u64 bits = m[wi];
        while (bits) {
            out.push_back(static_cast<u32>(wi * 64 + std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

std::optional<std::size_t> SubgroupLattice::find(std::span<const u64> m) const {
    auto it = index_.find(hash_words(m));
    if (it == index_.end()) return std::nullopt;
    for (u32 id : it->second) {
        auto cand = mask(id);
        if (std::equal(m.begin(), m.end(), cand.begin())) return id;
    }
    return std::nullopt;
}

OrderSpectrum element_orders(const CayleyGroup& g) {
    std::map<u64, u64> elems_of_order;
    for (u32 x = 0; x < g.order; ++x) {
        u32 cur = x, order = 1;
        while (cur != g.identity) {
            cur = g.mul(cur, x);
            ++order;
        }
        ++elems_of_order[order];
    }
    OrderSpectrum spec;
    for (auto [d, cnt] : elems_of_order) {
        u64 phi = euler_phi(d);
        if (cnt % phi != 0)
            throw std::logic_error("element order census is not divisible by phi(d)");
        spec[d] = cnt / phi;
    }
    return spec;
}

Rational cdeg_of(const SubgroupLattice& lat) {
    return make_ratio(Integer(static_cast<unsigned long>(lat.num_cyclic())),
                      Integer(static_cast<unsigned long>(lat.size())));
}

Rational ndeg_of(const SubgroupLattice& lat) {
    return make_ratio(Integer(static_cast<unsigned long>(lat.num_normal())),
                      Integer(static_cast<unsigned long>(lat.size())));
}

Rational sd_of(const SubgroupLattice& lat, const CayleyGroup& g, const OracleLimits& limits) {
    const std::size_t L = lat.size(), W = lat.words();
    WorkBudget budget(limits.max_work);
    budget.charge(static_cast<u64>(L) * L); // the pair scan itself
    std::vector<u64> hk(W), kh(W);
    u64 permuting = 0;

    auto product_mask = [&](std::size_t i, std::size_t j, std::vector<u64>& out) {
        std::fill(out.begin(), out.end(), 0);
        auto mi = lat.mask(i);
        auto mj = lat.mask(j);
        for (std::size_t wi = 0; wi < W; ++wi) {
            u64 bits = mi[wi];
            while (bits) {
                u32 h = static_cast<u32>(wi * 64 + std::countr_zero(bits));
                bits &= bits - 1;
                for (std::size_t wj = 0; wj < W; ++wj) {
                    u64 b2 = mj[wj];
                    while (b2) {
                        u32 k = static_cast<u32>(wj * 64 + std::countr_zero(b2));
                        b2 &= b2 - 1;
                        set_bit(out.data(), g.mul(h, k));
                    }
                }
            }
        }
    };

    for (std::size_t i = 0; i < L; ++i) {
        for (std::size_t j = 0; j < L; ++j) {
            // a normal factor always permutes: HK = KH when H or K is normal
            if (lat.is_normal(i) || lat.is_normal(j)) {
                ++permuting;
                continue;
            }
            budget.charge(2ull * lat.subgroup_order(i) * lat.subgroup_order(j));
            product_mask(i, j, hk);
            product_mask(j, i, kh);
            if (hk == kh) ++permuting;
        }
    }
    return make_ratio(Integer(static_cast<unsigned long>(permuting)),
                      Integer(static_cast<unsigned long>(L) * L));
}

bool all_proper_cyclic(const SubgroupLattice& lat) {
    for (std::size_t i = 0; i < lat.size(); ++i)
        if (!lat.is_cyclic(i) && lat.subgroup_order(i) != lat.group_order()) return false;
    return true;
}

Rational cdeg_oracle(const GroupSpec& spec, const OracleLimits& limits) {
    CayleyGroup g = build_group(spec, limits);
    return cdeg_of(enumerate_subgroups(g, limits));
}

Rational ndeg_oracle(const GroupSpec& spec, const OracleLimits& limits) {
    CayleyGroup g = build_group(spec, limits);
    return ndeg_of(enumerate_subgroups(g, limits));
}

Rational sd_oracle(const GroupSpec& spec, const OracleLimits& limits) {
    CayleyGroup g = build_group(spec, limits);
    return sd_of(enumerate_subgroups(g, limits), g, limits);
}

} // namespace cyc
