#include "mgs/chordal_dp.hpp"

#include <algorithm>
#include <unordered_map>

#include "mgs/geodesic.hpp"

namespace mgs {

namespace {

std::uint32_t full_mask(size_t bits) {
    return bits == 0 ? 0u : (std::uint32_t(1) << bits) - 1u;
}

} // namespace

BagContext make_bag_context_chordal(const std::vector<int>& bag) {
    if (bag.size() > 6)
        throw CapExceededError("chordal mode: bag too large for subset vectors");
    BagContext ctx;
    ctx.bag = bag;
    ctx.family.resize(size_t(1) << bag.size());
    for (std::uint32_t m = 0; m < ctx.family.size(); ++m) ctx.family[m] = m;
    ctx.ext_allowed = ctx.family.size() >= 64
                          ? ~std::uint64_t(0)
                          : (std::uint64_t(1) << ctx.family.size()) - 1;
    return ctx;
}

BagContext make_bag_context_interval(
    const std::vector<int>& bag,
    const std::vector<std::pair<Rational, Rational>>& rep) {
    BagContext ctx;
    ctx.bag = bag;
    const int b = int(bag.size());
    std::vector<std::uint32_t> fam;
    for (int i = 0; i < b; ++i) {
        std::uint32_t left = 0, right = 0;
        for (int j = 0; j < b; ++j) {
            if (rep[bag[j]].first <= rep[bag[i]].first) left |= 1u << j;
            if (rep[bag[j]].second >= rep[bag[i]].second) right |= 1u << j;
        }
        fam.push_back(left);
        fam.push_back(right);
        fam.push_back(1u << i);
    }
    std::sort(fam.begin(), fam.end());
    fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
    if (fam.size() > 60)
        throw CapExceededError("interval mode: family too large");
    ctx.family = std::move(fam);
    // exterior vertices sit to the right of the bag, so their close sets are
    // exactly the right-endpoint suffixes; only those members may carry
    // exterior promises
    ctx.ext_allowed = 0;
    for (size_t i = 0; i < ctx.family.size(); ++i) {
        std::uint32_t a = ctx.family[i];
        if (a == 0) continue;
        int argmin = -1;
        for (int j = 0; j < b; ++j)
            if ((a >> j) & 1)
                if (argmin == -1 ||
                    rep[bag[j]].second < rep[bag[argmin]].second)
                    argmin = j;
        std::uint32_t suffix = 0;
        for (int j = 0; j < b; ++j)
            if (rep[bag[j]].second >= rep[bag[argmin]].second) suffix |= 1u << j;
        if (suffix == a) ctx.ext_allowed |= std::uint64_t(1) << i;
    }
    return ctx;
}

std::uint32_t forced_cover(const BagContext& ctx, std::uint64_t t_int,
                           std::uint64_t t_ext) {
    std::uint32_t forced = 0;
    for (size_t i = 0; i < ctx.family.size(); ++i) {
        if (!((t_int >> i) & 1)) continue;
        std::uint32_t a = ctx.family[i];
        if (a == 0) continue;
        for (size_t j = 0; j < ctx.family.size(); ++j) {
            if (!((t_ext >> j) & 1)) continue;
            std::uint32_t b = ctx.family[j];
            if (b == 0) continue;
            std::uint32_t inter = a & b;
            forced |= inter ? inter : (a | b);
        }
    }
    return forced;
}

std::vector<TypeTuple> enumerate_valid_types(const BagContext& ctx) {
    const size_t f = ctx.family.size();
    const int b = int(ctx.bag.size());
    if (f > 10)
        throw CapExceededError("enumerate_valid_types: family too large");

    // singleton family indices per bag position, -1 when untracked
    std::vector<int> singleton(b, -1);
    for (int i = 0; i < b; ++i) singleton[i] = ctx.family_index(1u << i);
    int empty_idx = ctx.family_index(0);

    std::vector<TypeTuple> out;
    const std::uint64_t vec_count = std::uint64_t(1) << f;
    for (std::uint64_t ti = 0; ti < vec_count; ++ti) {
        if (empty_idx >= 0 && ((ti >> empty_idx) & 1)) continue;
        for (std::uint64_t te = 0; te < vec_count; ++te) {
            if (empty_idx >= 0 && ((te >> empty_idx) & 1)) continue;
            std::uint32_t forced = forced_cover(ctx, ti, te);
            for (std::uint32_t bag = 0; bag <= full_mask(b); ++bag) {
                bool ok = true;
                for (int i = 0; i < b && ok; ++i)
                    if ((bag >> i) & 1)
                        ok = singleton[i] >= 0 && ((ti >> singleton[i]) & 1);
                if (!ok) continue;
                // t_cov ranges over supersets of the forced mask
                std::uint32_t rest = full_mask(b) & ~forced;
                std::uint32_t sub = rest;
                while (true) {
                    out.push_back({ti, te, forced | sub, bag});
                    if (sub == 0) break;
                    sub = (sub - 1) & rest;
                }
            }
        }
    }
    return out;
}

namespace {

// child bag position -> parent bag position (vertex-id based)
std::vector<int> position_map(const BagContext& from, const BagContext& to) {
    std::vector<int> map(from.bag.size(), -1);
    for (size_t i = 0; i < from.bag.size(); ++i)
        map[i] = to.position(from.bag[i]);
    return map;
}

std::uint32_t remap_mask(std::uint32_t mask, const std::vector<int>& map) {
    std::uint32_t out = 0;
    for (size_t i = 0; i < map.size(); ++i)
        if ((mask >> i) & 1) out |= 1u << map[i];
    return out;
}

} // namespace

bool compatible_introduce(const TypeTuple& parent, const TypeTuple& child,
                          int x, const BagContext& pctx,
                          const BagContext& cctx) {
    const int bu = int(cctx.bag.size());
    const int px = pctx.position(x);
    if (px < 0) return false;
    auto c2p = position_map(cctx, pctx);
    const std::uint32_t xbit = 1u << px;
    const std::uint32_t xu_parent = remap_mask(full_mask(bu), c2p);

    // (a) bags agree off x
    if (remap_mask(child.t_bag, c2p) != (parent.t_bag & ~xbit)) return false;

    bool x_in_bag = parent.t_bag & xbit;

    // (f) singleton of x tracks membership
    if (pctx.bit(parent.t_int, xbit) != x_in_bag) return false;

    for (std::uint32_t a = 0; a <= full_mask(bu); ++a) {
        std::uint32_t pa = remap_mask(a, c2p);
        // (h) interior bits carry over
        if (pctx.bit(parent.t_int, pa) != cctx.bit(child.t_int, a)) return false;
        // (g) no interior set may contain x
        if (a != 0 && pctx.bit(parent.t_int, pa | xbit)) return false;
        // (c) exterior pairing for nonempty proper subsets
        if (a != 0 && a != full_mask(bu)) {
            bool want = cctx.bit(child.t_ext, a);
            bool have = pctx.bit(parent.t_ext, pa) ||
                        pctx.bit(parent.t_ext, pa | xbit);
            if (want != have) return false;
        }
    }
    // (d) the full child bag slot
    if (bu > 0) {
        bool want = cctx.bit(child.t_ext, full_mask(bu));
        bool have = pctx.bit(parent.t_ext, xu_parent | xbit) || // X_v
                    pctx.bit(parent.t_ext, xu_parent) ||        // X_u
                    pctx.bit(parent.t_ext, xbit) ||             // {x}
                    x_in_bag;
        if (want != have) return false;
    }

    // cov is canonical: inherited, bag members, and pair-forced vertices;
    // this folds condition (e) into the x bit of t_cov
    std::uint32_t canonical = remap_mask(child.t_cov, c2p) |
                              (x_in_bag ? xbit : 0u) |
                              forced_cover(pctx, parent.t_int, parent.t_ext);
    return parent.t_cov == canonical;
}

bool compatible_forget(const TypeTuple& parent, const TypeTuple& child,
                       int x, const BagContext& pctx,
                       const BagContext& cctx) {
    const int bv = int(pctx.bag.size());
    const int cx = cctx.position(x);
    if (cx < 0) return false;
    auto p2c = position_map(pctx, cctx);
    const std::uint32_t xbit = 1u << cx;
    const std::uint32_t xv_child = remap_mask(full_mask(bv), p2c);

    // (a) bag shrinks by x
    if (remap_mask(parent.t_bag, p2c) != (child.t_bag & ~xbit)) return false;

    for (std::uint32_t a = 0; a <= full_mask(bv); ++a) {
        std::uint32_t ca = remap_mask(a, p2c);
        // (b) exterior bits copy down
        if (pctx.bit(parent.t_ext, a) != cctx.bit(child.t_ext, ca)) return false;
        // (c) nothing exterior may contain x
        if (cctx.bit(child.t_ext, ca | xbit)) return false;
        // (d) interior merge for nonempty proper subsets
        if (a != 0 && a != full_mask(bv)) {
            bool want = pctx.bit(parent.t_int, a);
            bool have = cctx.bit(child.t_int, ca) ||
                        cctx.bit(child.t_int, ca | xbit);
            if (want != have) return false;
        }
    }
    // (e) the full parent bag slot
    if (bv > 0) {
        bool want = pctx.bit(parent.t_int, full_mask(bv));
        bool have = cctx.bit(child.t_int, xv_child | xbit) || // X_u
                    cctx.bit(child.t_int, xv_child) ||        // X_v
                    cctx.bit(child.t_int, xbit);              // {x}
        if (want != have) return false;
    }

    // (f) x must be covered before it is forgotten
    if (!(child.t_cov & xbit)) return false;
    return remap_mask(parent.t_cov, p2c) == (child.t_cov & ~xbit);
}

namespace {

std::uint32_t cross_cover(const BagContext& ctx, std::uint64_t int1,
                          std::uint64_t int2) {
    std::uint32_t out = 0;
    for (size_t i = 0; i < ctx.family.size(); ++i) {
        if (!((int1 >> i) & 1) || ctx.family[i] == 0) continue;
        for (size_t j = 0; j < ctx.family.size(); ++j) {
            if (!((int2 >> j) & 1) || ctx.family[j] == 0) continue;
            std::uint32_t inter = ctx.family[i] & ctx.family[j];
            out |= inter ? inter : (ctx.family[i] | ctx.family[j]);
        }
    }
    return out;
}

} // namespace

bool compatible_join(const TypeTuple& parent, const TypeTuple& left,
                     const TypeTuple& right, const BagContext& ctx) {
    if (parent.t_bag != left.t_bag || parent.t_bag != right.t_bag) return false;
    // (b) each side's exterior is the other's interior plus the parent's
    if (left.t_ext != (right.t_int | parent.t_ext)) return false;
    if (right.t_ext != (left.t_int | parent.t_ext)) return false;
    // (d)+(e) interiors merge
    if (parent.t_int != (left.t_int | right.t_int)) return false;
    // (c) coverage from both sides plus the cross pairs
    std::uint32_t cov =
        left.t_cov | right.t_cov | cross_cover(ctx, left.t_int, right.t_int);
    return parent.t_cov == cov;
}

bool compatible_root(const TypeTuple& child, int x, const BagContext& cctx) {
    int cx = cctx.position(x);
    if (cx < 0) return false;
    std::uint32_t xbit = 1u << cx;
    return (child.t_bag & xbit) && child.t_ext == 0 && (child.t_cov & xbit);
}

// ----------------------------------------------------------------- engine

namespace {

struct Entry {
    int size = 0;
    VertexSet cert;
};

using Table = std::unordered_map<TypeTuple, Entry, TypeTupleHash>;

class DpEngine {
public:
    DpEngine(const Graph& g, const NiceTreeDecomposition& td, DpMode mode,
             const std::vector<std::pair<Rational, Rational>>* rep,
             const SolveBudget& budget, const DpOptions& opts)
        : g_(g), td_(td), mode_(mode), rep_(rep), budget_(budget), opts_(opts) {
        ctx_.reserve(td.nodes.size());
        for (const auto& nd : td.nodes)
            ctx_.push_back(mode == DpMode::Chordal
                               ? make_bag_context_chordal(nd.bag)
                               : make_bag_context_interval(nd.bag, *rep));
        if (opts_.check_certificates) {
            subtree_ = subtree_vertices(g, td);
            dist_ = all_pairs_distances(g);
        }
        // one exterior promise per still-unseen vertex at most
        {
            auto below = subtree_vertices(g, td);
            future_.resize(td.nodes.size());
            for (size_t i = 0; i < td.nodes.size(); ++i)
                future_[i] = g.n() - below[i].size();
        }
        start_ = std::chrono::steady_clock::now();
    }

    VertexSet run() {
        std::vector<Table> tables(td_.nodes.size());
        for (int i = 0; i < int(td_.nodes.size()); ++i) {
            const auto& nd = td_.nodes[i];
            for (int c : nd.children)
                if (c >= i) throw std::logic_error("dp: node order broken");
            if (i == td_.root) break;
            switch (nd.kind) {
                case NodeKind::Leaf:
                    tables[i].emplace(TypeTuple{}, Entry{0, VertexSet(g_.n())});
                    break;
                case NodeKind::Introduce:
                    tables[i] = introduce_up(i, tables[nd.children[0]]);
                    tables[nd.children[0]].clear();
                    break;
                case NodeKind::Forget:
                    tables[i] = forget_up(i, tables[nd.children[0]]);
                    tables[nd.children[0]].clear();
                    break;
                case NodeKind::Join:
                    tables[i] = join_up(i, tables[nd.children[0]],
                                        tables[nd.children[1]]);
                    tables[nd.children[0]].clear();
                    tables[nd.children[1]].clear();
                    break;
            }
            if (opts_.check_certificates) audit(i, tables[i]);
        }

        // the root accepts covered singleton-bag types with empty exterior
        const auto& root = td_.nodes[td_.root];
        int child = root.children.at(0);
        int x = root.vertex;
        const Entry* best = nullptr;
        for (const auto& [ty, e] : tables[child]) {
            if (!compatible_root(ty, x, ctx_[child])) continue;
            if (!best || e.size < best->size ||
                (e.size == best->size && e.cert.lex_less(best->cert)))
                best = &e;
        }
        if (!best) throw std::logic_error("dp: no feasible root type");
        return best->cert;
    }

private:
    const Graph& g_;
    const NiceTreeDecomposition& td_;
    DpMode mode_;
    const std::vector<std::pair<Rational, Rational>>* rep_;
    SolveBudget budget_;
    DpOptions opts_;
    std::vector<BagContext> ctx_;
    std::vector<int> future_;
    std::vector<VertexSet> subtree_;
    DistanceMatrix dist_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t work_ = 0;

    void bump() {
        if (++work_ > budget_.max_candidates)
            throw BudgetExceededError("dp: candidate budget exhausted");
        if ((work_ & 0xfff) == 0 &&
            std::chrono::steady_clock::now() - start_ >= budget_.time_limit)
            throw BudgetExceededError("dp: time budget exhausted");
    }

    static void improve(Table& t, const TypeTuple& ty, Entry e) {
        auto it = t.find(ty);
        if (it == t.end()) {
            t.emplace(ty, std::move(e));
        } else if (e.size < it->second.size ||
                   (e.size == it->second.size &&
                    e.cert.lex_less(it->second.cert))) {
            it->second = std::move(e);
        }
    }

    Table introduce_up(int node, const Table& child_table) {
        const auto& nd = td_.nodes[node];
        const BagContext& pctx = ctx_[node];
        const BagContext& cctx = ctx_[nd.children[0]];
        const int bu = int(cctx.bag.size());
        const int px = pctx.position(nd.vertex);
        const std::uint32_t xbit = 1u << px;
        auto c2p = position_map(cctx, pctx);
        const std::uint32_t xu_parent = remap_mask(full_mask(bu), c2p);
        int idx_xv = pctx.family_index(xu_parent | xbit);
        int idx_xu = pctx.family_index(xu_parent);
        int idx_x = pctx.family_index(xbit);
        if (idx_xv >= 0 && !((pctx.ext_allowed >> idx_xv) & 1)) idx_xv = -1;
        if (idx_xu >= 0 && !((pctx.ext_allowed >> idx_xu) & 1)) idx_xu = -1;
        int idx_x_ext = idx_x;
        if (idx_x_ext >= 0 && !((pctx.ext_allowed >> idx_x_ext) & 1))
            idx_x_ext = -1;
        // promises are backed by future vertices or current bag members
        const int max_promises = future_[node] + int(pctx.bag.size());

        Table out;
        for (const auto& [cty, centry] : child_table) {
            // interior bits are fully determined; bail out when a set bit
            // has no representable image
            std::uint64_t base_int = 0;
            bool representable = true;
            for (size_t i = 0; i < cctx.family.size() && representable; ++i) {
                if (!((cty.t_int >> i) & 1)) continue;
                int pi = pctx.family_index(remap_mask(cctx.family[i], c2p));
                if (pi < 0) representable = false;
                else base_int |= std::uint64_t(1) << pi;
            }
            if (!representable) continue;

            // exterior slots: child family members split into proper subsets
            // (paired bits) and the full-bag slot
            struct Slot {
                std::vector<std::uint64_t> options; // parent ext masks
            };
            std::vector<Slot> proper_slots;
            bool child_full_ext = bu > 0 && cctx.bit(cty.t_ext, full_mask(bu));
            bool slots_ok = true;
            for (size_t i = 0; i < cctx.family.size() && slots_ok; ++i) {
                std::uint32_t a = cctx.family[i];
                if (a == 0 || a == full_mask(bu)) continue;
                if (!((cty.t_ext >> i) & 1)) continue;
                std::uint32_t pa = remap_mask(a, c2p);
                int ia = pctx.family_index(pa);
                int iax = pctx.family_index(pa | xbit);
                if (ia >= 0 && !((pctx.ext_allowed >> ia) & 1)) ia = -1;
                if (iax >= 0 && !((pctx.ext_allowed >> iax) & 1)) iax = -1;
                Slot s;
                if (ia >= 0) s.options.push_back(std::uint64_t(1) << ia);
                if (iax >= 0) s.options.push_back(std::uint64_t(1) << iax);
                if (ia >= 0 && iax >= 0)
                    s.options.push_back((std::uint64_t(1) << ia) |
                                        (std::uint64_t(1) << iax));
                if (s.options.empty()) slots_ok = false;
                proper_slots.push_back(std::move(s));
            }
            if (!slots_ok) continue;

            for (int with_x = 0; with_x <= 1; ++with_x) {
                std::uint32_t t_bag =
                    remap_mask(cty.t_bag, c2p) | (with_x ? xbit : 0u);
                std::uint64_t t_int = base_int;
                if (with_x) {
                    if (idx_x < 0) continue;
                    t_int |= std::uint64_t(1) << idx_x;
                }

                // the full-bag slot of (d)
                std::vector<std::uint64_t> full_options;
                if (bu == 0) {
                    // no exterior tracking below: parent promises are free
                    std::vector<int> members;
                    for (size_t i = 0; i < pctx.family.size(); ++i)
                        if (pctx.family[i] != 0 &&
                            ((pctx.ext_allowed >> i) & 1))
                            members.push_back(int(i));
                    for (std::uint32_t sub = 0;
                         sub < (1u << members.size()); ++sub) {
                        std::uint64_t m = 0;
                        for (size_t k = 0; k < members.size(); ++k)
                            if ((sub >> k) & 1)
                                m |= std::uint64_t(1) << members[k];
                        full_options.push_back(m);
                    }
                } else if (!child_full_ext) {
                    if (with_x) continue; // x in the solution forces the slot
                    full_options.push_back(0);
                } else {
                    for (int b1 = 0; b1 <= 1; ++b1)
                        for (int b2 = 0; b2 <= 1; ++b2)
                            for (int b3 = 0; b3 <= 1; ++b3) {
                                if (!(b1 || b2 || b3 || with_x)) continue;
                                if (b1 && idx_xv < 0) continue;
                                if (b2 && idx_xu < 0) continue;
                                if (b3 && idx_x_ext < 0) continue;
                                std::uint64_t m = 0;
                                if (b1) m |= std::uint64_t(1) << idx_xv;
                                if (b2) m |= std::uint64_t(1) << idx_xu;
                                if (b3) m |= std::uint64_t(1) << idx_x_ext;
                                full_options.push_back(m);
                            }
                    std::sort(full_options.begin(), full_options.end());
                    full_options.erase(
                        std::unique(full_options.begin(), full_options.end()),
                        full_options.end());
                }

                // cartesian product over slots
                std::vector<size_t> pick(proper_slots.size(), 0);
                while (true) {
                    std::uint64_t slot_ext = 0;
                    for (size_t s = 0; s < proper_slots.size(); ++s)
                        slot_ext |= proper_slots[s].options[pick[s]];
                    for (std::uint64_t fo : full_options) {
                        bump();
                        std::uint64_t t_ext = slot_ext | fo;
                        if (__builtin_popcountll(t_ext) > max_promises)
                            continue;
                        std::uint32_t t_cov =
                            remap_mask(cty.t_cov, c2p) |
                            (with_x ? xbit : 0u) |
                            forced_cover(pctx, t_int, t_ext);
                        VertexSet cert = centry.cert;
                        if (with_x) cert.insert(nd.vertex);
                        improve(out, {t_int, t_ext, t_cov, t_bag},
                                {cert.size(), std::move(cert)});
                    }
                    size_t s = 0;
                    while (s < pick.size() &&
                           ++pick[s] == proper_slots[s].options.size()) {
                        pick[s] = 0;
                        ++s;
                    }
                    if (s == pick.size()) break;
                }
            }
        }
        return out;
    }

    Table forget_up(int node, const Table& child_table) {
        const auto& nd = td_.nodes[node];
        const BagContext& pctx = ctx_[node];
        const BagContext& cctx = ctx_[nd.children[0]];
        const int bv = int(pctx.bag.size());
        const int cx = cctx.position(nd.vertex);
        const std::uint32_t xbit = 1u << cx;
        auto p2c = position_map(pctx, cctx);
        const std::uint32_t xv_child = remap_mask(full_mask(bv), p2c);

        Table out;
        for (const auto& [cty, centry] : child_table) {
            bump();
            if (!(cty.t_cov & xbit)) continue; // x never got covered

            // no exterior promise may involve x
            bool ok = true;
            for (size_t i = 0; i < cctx.family.size() && ok; ++i)
                if (((cty.t_ext >> i) & 1) && (cctx.family[i] & xbit)) ok = false;
            if (!ok) continue;

            std::uint64_t t_ext = 0, t_int = 0;
            for (size_t i = 0; i < pctx.family.size() && ok; ++i) {
                std::uint32_t a = pctx.family[i];
                std::uint32_t ca = remap_mask(a, p2c);
                if (cctx.bit(cty.t_ext, ca)) t_ext |= std::uint64_t(1) << i;
                bool bit;
                if (a == 0) {
                    bit = false; // the empty set never registers
                } else if (a == full_mask(bv)) {
                    bit = cctx.bit(cty.t_int, xv_child | xbit) ||
                          cctx.bit(cty.t_int, xv_child) ||
                          cctx.bit(cty.t_int, xbit);
                } else {
                    bit = cctx.bit(cty.t_int, ca) ||
                          cctx.bit(cty.t_int, ca | xbit);
                }
                if (bit) t_int |= std::uint64_t(1) << i;
            }
            if (!ok) continue;

            // every set child bit must survive the projection
            for (size_t i = 0; i < cctx.family.size() && ok; ++i) {
                if (!((cty.t_int >> i) & 1)) continue;
                std::uint32_t a = cctx.family[i];
                std::uint32_t target;
                if (a == xbit || a == xv_child || a == (xv_child | xbit))
                    target = full_mask(bv);
                else
                    target = 0;
                std::uint32_t pa = target;
                if (target == 0) {
                    // generic projection a \ {x}
                    std::uint32_t stripped = a & ~xbit;
                    if (stripped == 0) { ok = false; break; }
                    pa = 0;
                    for (int k = 0; k < bv; ++k)
                        if (stripped & (1u << p2c[k])) pa |= 1u << k;
                    // remap child positions back to parent positions
                }
                int pi = pctx.family_index(pa);
                if (pi < 0 || !((t_int >> pi) & 1)) ok = false;
            }
            if (!ok) continue;

            // exterior bits set in the child must be expressible above
            for (size_t i = 0; i < cctx.family.size() && ok; ++i) {
                if (!((cty.t_ext >> i) & 1)) continue;
                std::uint32_t a = cctx.family[i] & ~xbit;
                std::uint32_t pa = 0;
                for (int k = 0; k < bv; ++k)
                    if (a & (1u << p2c[k])) pa |= 1u << k;
                int pi = pctx.family_index(pa);
                if (pi < 0 || !((t_ext >> pi) & 1)) ok = false;
            }
            if (!ok) continue;

            if (__builtin_popcountll(t_ext) >
                future_[node] + int(pctx.bag.size()))
                continue;
            std::uint32_t t_cov = 0;
            for (int k = 0; k < bv; ++k)
                if (cty.t_cov & (1u << p2c[k])) t_cov |= 1u << k;
            std::uint32_t t_bag = 0;
            for (int k = 0; k < bv; ++k)
                if (cty.t_bag & (1u << p2c[k])) t_bag |= 1u << k;

            improve(out, {t_int, t_ext, t_cov, t_bag},
                    {centry.size, centry.cert});
        }
        return out;
    }

    Table join_up(int node, const Table& left, const Table& right) {
        const BagContext& ctx = ctx_[node];
        Table out;
        for (const auto& [t1, e1] : left) {
            for (const auto& [t2, e2] : right) {
                if (t1.t_bag != t2.t_bag) continue;
                if (t2.t_int & ~t1.t_ext) continue;
                if (t1.t_int & ~t2.t_ext) continue;
                std::uint64_t lower = (t1.t_ext & ~t2.t_int) |
                                      (t2.t_ext & ~t1.t_int);
                std::uint64_t free = (t1.t_ext & t2.t_ext) & ~lower;
                std::uint64_t t_int = t1.t_int | t2.t_int;
                std::uint32_t base_cov =
                    t1.t_cov | t2.t_cov | cross_cover(ctx, t1.t_int, t2.t_int);
                VertexSet cert = e1.cert | e2.cert;
                int size = cert.size();

                std::uint64_t sub = free;
                while (true) {
                    bump();
                    std::uint64_t t_ext = lower | sub;
                    if (__builtin_popcountll(t_ext) <=
                        future_[node] + int(ctx.bag.size()))
                        improve(out, {t_int, t_ext, base_cov, t1.t_bag},
                                {size, cert});
                    if (sub == 0) break;
                    sub = (sub - 1) & free;
                }
            }
        }
        return out;
    }

    // def:type audit of every table entry against the auxiliary graph
    void audit(int node, const Table& table) const {
        const BagContext& ctx = ctx_[node];
        const auto& bag = ctx.bag;
        const VertexSet& below = subtree_[node];

        for (const auto& [ty, e] : table) {
            // (i) bag restriction
            std::uint32_t bag_mask = 0;
            for (size_t i = 0; i < bag.size(); ++i)
                if (e.cert.contains(bag[i])) bag_mask |= 1u << i;
            if (bag_mask != ty.t_bag)
                throw std::logic_error("dp audit: certificate bag mismatch");

            // (iii) interior close sets
            VertexSet bagset(g_.n());
            for (int v : bag) bagset.insert(v);
            std::uint64_t observed = 0;
            if (!bag.empty()) {
                std::vector<int> certs = e.cert.to_vector();
                for (int y : certs) {
                    auto cs = close_set(g_, y, bagset, &dist_);
                    std::uint32_t mask = 0;
                    for (size_t i = 0; i < bag.size(); ++i)
                        if (cs.members.contains(bag[i])) mask |= 1u << i;
                    int idx = ctx.family_index(mask);
                    if (idx < 0)
                        throw std::logic_error(
                            "dp audit: close set outside the family");
                    observed |= std::uint64_t(1) << idx;
                }
            }
            if (observed != ty.t_int)
                throw std::logic_error(
                    "dp audit: t_int mismatch at node " + std::to_string(node) +
                    " int=" + std::to_string(ty.t_int) +
                    " ext=" + std::to_string(ty.t_ext) +
                    " cov=" + std::to_string(ty.t_cov) +
                    " bag=" + std::to_string(ty.t_bag) +
                    " observed=" + std::to_string(observed) +
                    " certsize=" + std::to_string(e.size));

            // (ii) coverage in the auxiliary graph
            std::vector<std::uint32_t> s_sets;
            for (size_t i = 0; i < ctx.family.size(); ++i)
                if ((ty.t_ext >> i) & 1) s_sets.push_back(ctx.family[i]);

            auto sub = induced_subgraph(g_, below);
            int base = sub.graph.n();
            std::vector<Edge> aux_edges = sub.graph.edges();
            for (size_t s = 0; s < s_sets.size(); ++s)
                for (size_t i = 0; i < bag.size(); ++i)
                    if ((s_sets[s] >> i) & 1)
                        aux_edges.emplace_back(int(base + s),
                                               sub.from_original[bag[i]]);
            Graph aux(base + int(s_sets.size()), aux_edges);
            auto adist = all_pairs_distances(aux);

            std::vector<int> solvers;
            e.cert.for_each(
                [&](int v) { solvers.push_back(sub.from_original[v]); });
            std::vector<int> partners = solvers;
            for (size_t s = 0; s < s_sets.size(); ++s)
                partners.push_back(int(base + s));

            std::vector<int> needed;
            below.for_each([&](int v) {
                if (!bagset.contains(v)) needed.push_back(sub.from_original[v]);
            });
            for (size_t i = 0; i < bag.size(); ++i)
                if ((ty.t_cov >> i) & 1)
                    needed.push_back(sub.from_original[bag[i]]);

            for (int w : needed) {
                bool covered = false;
                for (int w1 : solvers) {
                    for (int w2 : partners) {
                        Distance d = adist[w1][w2];
                        if (d == kUnreachable) continue;
                        if (adist[w1][w] != kUnreachable &&
                            adist[w][w2] != kUnreachable &&
                            adist[w1][w] + adist[w][w2] == d) {
                            covered = true;
                            break;
                        }
                    }
                    if (covered) break;
                }
                if (!covered)
                    throw std::logic_error("dp audit: uncovered vertex");
            }
        }
    }
};

SolveResult run_dp(const Graph& g, const NiceTreeDecomposition& td,
                   DpMode mode,
                   const std::vector<std::pair<Rational, Rational>>* rep,
                   const SolveBudget& budget, const DpOptions& opts,
                   const char* method) {
    auto t0 = std::chrono::steady_clock::now();
    DpEngine engine(g, td, mode, rep, budget, opts);
    VertexSet cert = engine.run();
    if (!is_geodetic(g, cert))
        throw std::logic_error("dp: certificate is not geodetic");
    SolveResult res;
    res.set = cert;
    res.size = cert.size();
    res.optimal = true;
    res.method = method;
    res.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - t0);
    return res;
}

} // namespace

SolveResult dp_min_geodetic_chordal(const Graph& g, const SolveBudget& budget,
                                    const DpOptions& opts) {
    if (!is_connected(g) || g.n() == 0)
        throw std::invalid_argument("dp chordal: graph must be connected and nonempty");
    auto td = build_nice_tree_decomposition(g); // throws on non-chordal
    if (td.width() > opts.omega_cap_chordal)
        throw CapExceededError("dp chordal: clique number exceeds the cap");
    return run_dp(g, td, DpMode::Chordal, nullptr, budget, opts, "chordal");
}

std::vector<VertexSet> interval_family_A(
    const VertexSet& clique,
    const std::vector<std::pair<Rational, Rational>>& rep) {
    auto xs = clique.to_vector();
    const int n = clique.universe_size();
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = i + 1; j < xs.size(); ++j) {
            const auto& a = rep[xs[i]];
            const auto& b = rep[xs[j]];
            if ((a.first < b.first ? b.first : a.first) >
                (a.second < b.second ? a.second : b.second))
                throw std::invalid_argument("interval_family_A: X is not a clique");
        }
    std::vector<VertexSet> fam;
    auto push_unique = [&](const VertexSet& s) {
        for (const auto& t : fam)
            if (t == s) return;
        fam.push_back(s);
    };
    for (int u : xs) {
        VertexSet left(n), right(n), self(n);
        for (int w : xs) {
            if (rep[w].first <= rep[u].first) left.insert(w);
            if (rep[w].second >= rep[u].second) right.insert(w);
        }
        self.insert(u);
        push_unique(left);
        push_unique(right);
        push_unique(self);
    }
    return fam;
}

std::vector<std::vector<int>> interval_maximal_cliques(
    const std::vector<std::pair<Rational, Rational>>& rep) {
    const int n = int(rep.size());
    std::vector<std::vector<int>> cands;
    for (int u = 0; u < n; ++u) {
        std::vector<int> k;
        for (int w = 0; w < n; ++w)
            if (rep[w].first <= rep[u].second && rep[u].second <= rep[w].second)
                k.push_back(w);
        cands.push_back(std::move(k));
    }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    std::vector<std::vector<int>> cliques;
    for (size_t i = 0; i < cands.size(); ++i) {
        bool maximal = true;
        for (size_t j = 0; j < cands.size() && maximal; ++j) {
            if (i == j || cands[j].size() <= cands[i].size()) continue;
            if (std::includes(cands[j].begin(), cands[j].end(),
                              cands[i].begin(), cands[i].end()))
                maximal = false;
        }
        if (maximal) cliques.push_back(cands[i]);
    }
    // order by stabbing point: the largest left endpoint of the members
    auto stab = [&](const std::vector<int>& k) {
        Rational p = rep[k[0]].first;
        for (int w : k)
            if (p < rep[w].first) p = rep[w].first;
        return p;
    };
    std::sort(cliques.begin(), cliques.end(),
              [&](const auto& a, const auto& b) { return stab(a) < stab(b); });
    return cliques;
}

SolveResult dp_min_geodetic_interval(
    const std::vector<std::pair<Rational, Rational>>& rep,
    const SolveBudget& budget, const DpOptions& opts) {
    if (rep.empty())
        throw std::invalid_argument("dp interval: empty representation");
    for (const auto& [lo, hi] : rep)
        if (hi < lo) throw std::invalid_argument("dp interval: hi < lo");
    Graph g = [&] {
        std::vector<Edge> edges;
        for (int i = 0; i < int(rep.size()); ++i)
            for (int j = i + 1; j < int(rep.size()); ++j) {
                Rational lo = rep[i].first < rep[j].first ? rep[j].first
                                                          : rep[i].first;
                Rational hi = rep[i].second < rep[j].second ? rep[i].second
                                                            : rep[j].second;
                if (lo <= hi) edges.emplace_back(i, j);
            }
        return Graph(int(rep.size()), edges);
    }();
    if (!is_connected(g))
        throw std::invalid_argument("dp interval: model must be connected");

    auto cliques = interval_maximal_cliques(rep);
    int omega = 0;
    for (const auto& k : cliques) omega = std::max(omega, int(k.size()));
    if (omega > opts.omega_cap_interval)
        throw CapExceededError("dp interval: clique number exceeds the cap");

    auto td = build_nice_path_decomposition(cliques, g.n());
    check_nice_tree_invariants(g, td);
    return run_dp(g, td, DpMode::Interval, &rep, budget, opts, "interval");
}

} // namespace mgs
