#include "hclab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <future>

namespace hclab {

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Vacuous: return "vacuous";
    case Verdict::Fail: return "FAIL";
    case Verdict::Skipped: return "skipped";
    }
    return "?";
}

const QuotientData& GroupContext::quot(int normal_index) const {
    auto it = quotients.find(normal_index);
    if (it == quotients.end()) throw Error("no quotient cached for that subgroup");
    return it->second;
}

std::string GroupContext::sub_token(int i) const {
    return "#" + std::to_string(i) + "(o" + std::to_string(lat[i].size()) + ")";
}

GroupContext make_group_context(std::string name, GroupPtr g, const HarnessConfig& cfg) {
    GroupContext ctx;
    ctx.name = std::move(name);
    ctx.g = g;
    ctx.lat = all_subgroups(g, cfg.caps.lattice);
    int L = ctx.count = ctx.lat.size();
    const Group& grp = *g;

    ctx.le_.assign(std::size_t(L) * L, 0);
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j)
            if (ctx.lat[i].size() <= ctx.lat[j].size() &&
                ctx.lat[i].bits().is_subset_of(ctx.lat[j].bits()))
                ctx.le_[std::size_t(i) * L + j] = 1;

    ctx.norm_in_.assign(std::size_t(L) * L, 0);
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j) {
            if (!ctx.leq(i, j)) continue;
            bool inv = true;
            for (int x : ctx.lat[j].elements()) {
                int xi = grp.inv(x);
                for (int e : ctx.lat[i].elements())
                    if (!ctx.lat[i].contains(grp.mul(grp.mul(xi, e), x))) {
                        inv = false;
                        break;
                    }
                if (!inv) break;
            }
            ctx.norm_in_[std::size_t(i) * L + j] = inv;
        }

    ctx.normals_in_sub.resize(L);
    for (int j = 0; j < L; ++j)
        for (int i = 0; i < L; ++i)
            if (ctx.leq(i, j) && ctx.normal_in(i, j)) ctx.normals_in_sub[j].push_back(i);

    for (int i = 0; i < L; ++i)
        if (ctx.lat.normal(i)) {
            ctx.normal_idx.push_back(i);
            ctx.normal_subs.push_back(ctx.lat[i]);
        }

    ctx.emb.resize(L);
    for (int i = 0; i < L; ++i) {
        const Subgroup& h = ctx.lat[i];
        ctx.emb[i].h = is_h_subgroup(h);
        ctx.emb[i].hc = is_hc_subgroup(h, ctx.normal_subs, cfg.hc_variant);
        ctx.emb[i].c_normal = is_c_normal(h, ctx.normal_subs);
        ctx.emb[i].weakly_h = is_weakly_h_subgroup(h, ctx.normal_subs);
        ctx.emb[i].subnormal = is_subnormal(h);
    }

    ctx.cyclic_flag.resize(L);
    ctx.abelian_flag.resize(L);
    for (int i = 0; i < L; ++i) {
        ctx.cyclic_flag[i] = is_cyclic(ctx.lat[i]);
        bool ab = true;
        const auto& el = ctx.lat[i].elements();
        for (std::size_t a = 0; a < el.size() && ab; ++a)
            for (std::size_t b = a + 1; b < el.size(); ++b)
                if (grp.mul(el[a], el[b]) != grp.mul(el[b], el[a])) {
                    ab = false;
                    break;
                }
        ctx.abelian_flag[i] = ab;
    }

    for (int nn : ctx.normal_idx) {
        auto [q, pi] = quotient(g, ctx.lat[nn]);
        QuotientData qd{q, std::move(pi), {}, false, false, false};
        for (int mm : ctx.normal_idx)
            if (ctx.leq(nn, mm)) qd.q_normals.push_back(qd.pi.push(ctx.lat[mm]));
        std::sort(qd.q_normals.begin(), qd.q_normals.end(),
                  [](const Subgroup& a, const Subgroup& b) { return a.less_than(b); });
        qd.nilpotent = is_nilpotent(q);
        qd.supersolvable = is_supersolvable(q);
        qd.solvable = is_solvable(q);
        ctx.quotients.emplace(nn, std::move(qd));
    }

    for (int nn : ctx.normal_idx) {
        Subgroup fs = generalized_fitting_of(ctx.lat[nn]);
        int idx = ctx.lat.index_of(fs);
        if (idx < 0) throw Error("F*(N) missing from lattice");
        ctx.fstar_of.emplace(nn, idx);
    }

    auto locate = [&](const Subgroup& s, const char* what) {
        int idx = ctx.lat.index_of(s);
        if (idx < 0) throw Error(std::string(what) + " missing from lattice");
        return idx;
    };
    ctx.idx_center = locate(center(g), "center");
    ctx.idx_frattini = locate(frattini(ctx.lat), "Frattini subgroup");
    ctx.idx_fitting = locate(fitting(g), "Fitting subgroup");
    ctx.idx_fstar = ctx.fstar_of.at(ctx.lat.full_index());
    ctx.idx_hypercenter = locate(hypercenter(g), "hypercenter");
    ctx.idx_residual = locate(nilpotent_residual(g), "nilpotent residual");
    ctx.idx_socle = locate(socle(g), "socle");

    ctx.primes = prime_divisors(grp.order());
    for (int p : ctx.primes) {
        ctx.sylow.emplace(p, locate(sylow_subgroup(g, p), "Sylow subgroup"));
        ctx.p_nilp.emplace(p, is_p_nilpotent(g, p));
    }
    ctx.nilpotent = is_nilpotent(g);
    ctx.supersolvable = is_supersolvable(g);
    ctx.solvable = is_solvable(g);
    ctx.tower = has_sylow_tower_supersolvable_type(g);

    for (int i = 0; i < L; ++i) {
        int index = grp.order() / ctx.lat[i].size();
        if (!is_prime(index)) continue;
        if (ctx.lat[i].is_whole_group()) continue;
        GroupView v = as_group(ctx.lat[i]);
        ctx.sub_formation.emplace(i, std::make_pair(is_supersolvable(v.group), is_solvable(v.group)));
    }
    return ctx;
}

// ---------------------------------------------------------------------------
// Statement evaluators

namespace {

using Checks = std::vector<StatementCheck>;

struct Emitter {
    const GroupContext& ctx;
    const HarnessConfig& cfg;
    Checks& out;
    const char* id;

    // Conclusion is lazy so vacuous tuples stay cheap outside diagnostic mode.
    void tuple(std::string params, bool hyp, const std::function<bool()>& concl,
               std::string witness = "") {
        StatementCheck c;
        c.statement = id;
        c.group = ctx.name;
        c.params = std::move(params);
        c.hypothesis_holds = hyp;
        if (hyp || cfg.diagnostic) c.conclusion_holds = concl();
        if (!hyp)
            c.verdict = Verdict::Vacuous;
        else
            c.verdict = *c.conclusion_holds ? Verdict::Pass : Verdict::Fail;
        c.witness = std::move(witness);
        out.push_back(std::move(c));
    }
};

std::string tok(const GroupContext& ctx, const char* key, int i) {
    return std::string(key) + "=" + ctx.sub_token(i);
}

// H-subgroup condition for the image of lat[i] in the quotient by lat[nn].
bool h_in_quotient(const GroupContext& ctx, int nn, int i) {
    const QuotientData& qd = ctx.quot(nn);
    return is_h_subgroup(qd.pi.push(ctx.lat[i])).holds;
}

bool hc_in_quotient(const GroupContext& ctx, const HarnessConfig& cfg, int nn, int i) {
    const QuotientData& qd = ctx.quot(nn);
    return is_hc_subgroup(qd.pi.push(ctx.lat[i]), qd.q_normals, cfg.hc_variant).holds;
}

// --- L2.1: H-subgroup facts -----------------------------------------------

void run_l211(const GroupContext& ctx, const HarnessConfig& cfg, Checks& out) {
    Emitter e{ctx, cfg, out, "L2.1.1"};
    for (int i = 0; i < ctx.count; ++i) {
        bool hyp = ctx.emb[i].h.holds && ctx.emb[i].subnormal;
        e.tuple(tok(ctx, "H", i), hyp, [&] { return ctx.lat.normal(i); });
    }
}

void run_l212(const GroupContext& ctx, const HarnessConfig& cfg, Checks& out) {
    Emitter e{ctx, cfg, out, "L2.1.2"};
    for (int i = 0; i < ctx.count; ++i)
        for (int j = 0; j < ctx.count; ++j) {
            if (!ctx.leq(i, j)) continue;
            bool hyp = ctx.emb[i].h.holds;
            e.tuple(tok(ctx, "H", i) + "," + tok(ctx, "K", j), hyp,
                    [&] { return is_h_subgroup_in(ctx.lat[j], ctx.lat[i]).holds; });
        }
}

void run_l213(const GroupContext& ctx, const HarnessConfig& cfg, Checks& out) {
    Emitter e{ctx, cfg, out, "L2.1.3"};
    for (int nn : ctx.normal_idx)
        for (int i = 0; i < ctx.count; ++i) {
            if (!ctx.leq(nn, i)) continue;
            e.tuple(tok(ctx, "H", i) + "," + tok(ctx, "N", nn), true,
                    [&] { return ctx.emb[i].h.holds == h_in_quotient(ctx, nn, i); });
        }
}

void run_l214(const GroupContext& ctx, const HarnessConfig& cfg, Checks& out) {
    Emitter e{ctx, cfg, out, "L2.1.4"};
    for (int i = 0; i < ctx.count; ++i)
        for (int nn : ctx.normal_idx) {
            int norm_i = ctx.lat.normalizer_index(i);
            bool hyp = ctx.emb[i].h.holds && ctx.leq(nn, norm_i);
            e.tuple(tok(ctx, "H", i) + "," + tok(ctx, "N", nn), hyp, [&] {
                Subgroup hn = join(ctx.lat[i], ctx.lat[nn]);
                int k = ctx.lat.index_of(hn);
                if (k < 0) throw Error("HN missing from lattice");
                return ctx.lat.normalizer_index(k) == norm_i && ctx.emb[k].h.holds;
            });
        }
}

// --- L2.2: HC-subgroup facts ----------------------------------------------

void run_l221(const GroupContext& ctx, const HarnessConfig& cfg, Checks& out) {
    Emitter e{ctx, cfg, out, "L2.2.1"};
    for (int i = 0; i < ctx.count; ++i)
        for (int j = 0; j < ctx.count; ++j) {
            if (!ctx.leq(i, j)) continue;
            bool hyp = ctx.emb[i].hc.holds;
            e.tuple(tok(ctx, "H", i) + "," + tok(ctx, "K", j), hyp, [&] {
                std::vector<Subgroup> normals;
                for (int t : ctx.normals_in_sub[j]) normals.push_back(ctx.lat[t]);
                return is_hc_subgroup_in(ctx.lat[j], ctx.lat[i], normals, cfg.hc_variant).holds;
            });
        }
}

void run_l222(const GroupContext& ctx, const HarnessConfig& cfg, Checks& out) {
    Emitter e{ctx, cfg, out, "L2.2.2"};
    for (int nn : ctx.normal_idx)
        for (int i = 0; i < ctx.count; ++i) {
            if (!ctx.leq(nn, i)) continue;
            e.tuple(tok(ctx, "H", i) + "," + tok(ctx, "N", nn), true,
                    [&] { return ctx.emb[i].hc.holds == hc_in_quotient(ctx, cfg, nn, i); });
        }
}

void run_l223(const GroupContext& ctx, const HarnessConfig& cfg, Checks& out) {
    Emitter e{ctx, cfg, out, "L2.2.3"};
    for (int p : ctx.primes)
        for (int i = 0; i < ctx.count; ++i) {
            if (ctx.lat[i].size() == 1 || !is_prime_power(ctx.lat[i].size(), p)) continue;
            for (int nn : ctx.normal_idx) {
                if (ctx.lat[nn].size() % p == 0) continue;
                bool hyp = ctx.emb[i].hc.holds;
                e.tuple("p=" + std::to_string(p) + "," + tok(ctx, "H", i) + "," +
                            tok(ctx, "N", nn),
                        hyp, [&] {
                            Subgroup hn = join(ctx.lat[i], ctx.lat[nn]);
                            int k = ctx.lat.index_of(hn);
                            if (k < 0) throw Error("HN missing from lattice");
                            return ctx.emb[k].hc.holds && hc_in_quotient(ctx, cfg, nn, k);
                        });
            }
        }
}

// --- L2.3 / L2.4 / L2.5 ----------------------------------------------------

void run_l23(const GroupContext& ctx, const HarnessConfig& cfg, Checks& out) {
    Emitter e{ctx, cfg, out, "L2.3"};
    if (ctx.primes.empty()) return;
    int p = ctx.primes.front();
    int pi = ctx.sylow.at(p);
    bool hyp = true;
    for (int m : maximal_subgroups_of(ctx.lat, pi))
        if (!ctx.emb[m].hc.holds) {
            hyp = false;
            break;
        }
    e.tuple("p=" + std::to_string(p) + "," + tok(ctx, "P", pi), hyp,
            [&] { return ctx.p_nilp.at(p); });
}

void run_l24(const GroupContext& ctx, const HarnessConfig& cfg, Checks& out) {
    Emitter e{ctx, cfg, out, "L2.4"};
    for (int i = 0; i < ctx.count; ++i) {
        if (!is_prime_power(ctx.lat[i].size(), 2)) continue;
        bool hyp = ctx.emb[i].h.holds;
        if (hyp) {
            Subgroup n = normalizer(ctx.lat[i]);
            Subgroup c = centralizer(ctx.lat[i]);
            hyp = is_prime_power(n.size() / c.size(), 2);
        }
        e.tuple(tok(ctx, "S", i), hyp, [&] {
            Subgroup closure = normal_closure(ctx.lat[i]);
            return ctx.lat[i].size() == p_part(closure.size(), 2);
        });
    }
}

void run_l251(const GroupContext& ctx, const HarnessConfig& cfg, Checks& out) {
    Emitter e{ctx, cfg, out, "L2.5.1"};
    for (int p : ctx.primes) {
        if (p == 2) continue;
        int pi = ctx.sylow.at(p);
        Subgroup n = ctx.lat[ctx.lat.normalizer_index(pi)];
        Subgroup zn = intersect(centralizer(n), n);
        bool hyp = true;
        for (int i = 0; i < ctx.count && hyp; ++i)
            if (ctx.lat[i].size() == p && ctx.leq(i, pi) && !ctx.lat[i].bits().is_subset_of(zn.bits()))
                hyp = false;
        e.tuple("p=" + std::to_string(p) + "," + tok(ctx, "P", pi), hyp,
                [&] { return ctx.p_nilp.at(p); });
    }
}

void run_l252(const GroupContext& ctx, const HarnessConfig& cfg, Checks& out) {
    Emitter e{ctx, cfg, out, "L2.5.2"};
    if (ctx.g->order() % 2 != 0) return;
    int pi = ctx.sylow.at(2);
    const Subgroup& n = ctx.lat[ctx.lat.normalizer_index(pi)];
    bool hyp = true;
    for (int i = 0; i < ctx.count && hyp; ++i) {
        int sz = ctx.lat[i].size();
        if ((sz != 2 && sz != 4) || !ctx.cyclic_flag[i] || !ctx.leq(i, pi)) continue;
        if (!is_quasinormal_in(ctx.lat, n, ctx.lat[i]).holds) hyp = false;
    }
    e.tuple("p=2," + tok(ctx, "P", pi), hyp, [&] { return ctx.p_nilp.at(2); });
}

// --- L2.6: generalized Fitting facts ---------------------------------------

void run_l261(const GroupContext& ctx, const HarnessConfig& cfg, Checks& out) {
    Emitter e{ctx, cfg, out, "L2.6.1"};
    for (int nn : ctx.normal_idx)
        e.tuple(tok(ctx, "N", nn), true, [&] {
            const Subgroup& fs_n = ctx.lat[ctx.fstar_of.at(nn)];
            ElementBitset expected = ctx.lat[nn].bits() & ctx.lat[ctx.idx_fstar].bits();
            return fs_n.bits() == expected;
        });
}

void run_l262(const GroupContext& ctx, const HarnessConfig& cfg, Checks& out) {
    Emitter e{ctx, cfg, out, "L2.6.2"};
    e.tuple("", true, [&] {
        int fs = ctx.idx_fstar;
        if (!ctx.leq(ctx.idx_fitting, fs)) return false;
        if (ctx.fstar_of.at(fs) != fs) return false;
        bool solvable_fs = is_solvable_subgroup(ctx.lat[fs]);
        if (solvable_fs && fs != ctx.idx_fitting) return false;
        return true;
    });
}

void run_l263(const GroupContext& ctx, const HarnessConfig& cfg, Checks& out) {
    Emitter e{ctx, cfg, out, "L2.6.3"};
    e.tuple("", true, [&] {
        Subgroup c = centralizer(ctx.lat[ctx.idx_fstar]);
        return c.bits().is_subset_of(ctx.lat[ctx.idx_fitting].bits());
    });
}

void run_l264(const GroupContext& ctx, const HarnessConfig& cfg, Checks& out) {
    Emitter e{ctx, cfg, out, "L2.6.4"};
    bool hyp = ctx.g->order() > 1;
    e.tuple("", hyp, [&] {
        int fs = ctx.idx_fstar;
        if (ctx.lat[fs].size() <= 1) return false;
        // F* is the largest normal quasinilpotent subgroup: it is itself
        // quasinilpotent and contains every quasinilpotent normal subgroup.
        if (ctx.fstar_of.at(fs) != fs) return false;
        for (int nn : ctx.normal_idx)
            if (ctx.fstar_of.at(nn) == nn && !ctx.leq(nn, fs)) return false;
        return true;
    });
}

// --- L2.7 ... L2.13 ---------------------------------------------------------

void run_l27(const GroupContext& ctx, const HarnessConfig& cfg, Checks& out) {
    Emitter e{ctx, cfg, out, "L2.7"};
    for (int kk : ctx.normal_idx)
        for (int i = 0; i < ctx.count; ++i) {
            if (!ctx.leq(i, kk) || !ctx.normal_in(i, kk)) continue;
            bool hyp = ctx.emb[i].hc.holds;
            e.tuple(tok(ctx, "H", i) + "," + tok(ctx, "K", kk), hyp,
                    [&] { return ctx.emb[i].c_normal.holds; });
        }
}

void run_l28(const GroupContext& ctx, const HarnessConfig& cfg, Checks& out) {
    Emitter e{ctx, cfg, out, "L2.8"};
    for (int p : ctx.primes)
        for (int i = 0; i < ctx.count; ++i) {
            if (ctx.lat[i].size() == 1 || !is_prime_power(ctx.lat[i].size(), p)) continue;
            bool hyp = ctx.emb[i].hc.holds && !ctx.emb[i].h.holds;
            std::string witness;
            bool found = false;
            if (hyp || cfg.diagnostic) {
                for (int nn : ctx.normal_idx) {
                    if (ctx.g->order() / ctx.lat[nn].size() != p) continue;
                    ElementBitset hm =
                        product_set(*ctx.g, ctx.lat[i].bits(), ctx.lat[nn].bits());
                    if (hm.count() == ctx.g->order()) {
                        found = true;
                        witness = tok(ctx, "M", nn);
                        break;
                    }
                }
            }
            e.tuple("p=" + std::to_string(p) + "," + tok(ctx, "H", i), hyp,
                    [&] { return found; }, std::move(witness));
        }
}

void run_l29(const GroupContext& ctx, const HarnessConfig& cfg, Checks& out) {
    for (FormationTag f : {FormationTag::Supersolvable, FormationTag::Solvable}) {
        Emitter e{ctx, cfg, out, "L2.9"};
        for (int nn : ctx.normal_idx) {
            if (!ctx.cyclic_flag[nn]) continue;
            const QuotientData& qd = ctx.quot(nn);
            bool hyp = f == FormationTag::Supersolvable ? qd.supersolvable : qd.solvable;
            e.tuple(std::string("F=") + formation_name(f) + "," + tok(ctx, "E", nn), hyp, [&] {
                return f == FormationTag::Supersolvable ? ctx.supersolvable : ctx.solvable;
            });
        }
    }
}

void run_l210(const GroupContext& ctx, const HarnessConfig& cfg, Checks& out) {
    for (FormationTag f : {FormationTag::Supersolvable, FormationTag::Solvable}) {
        Emitter e{ctx, cfg, out, "L2.10"};
        for (const auto& [i, flags] : ctx.sub_formation) {
            int p = ctx.g->order() / ctx.lat[i].size();
            bool m_in_f = f == FormationTag::Supersolvable ? flags.first : flags.second;
            bool hyp = m_in_f && !ctx.leq(ctx.idx_fitting, i);
            e.tuple(std::string("F=") + formation_name(f) + ",p=" + std::to_string(p) + "," +
                        tok(ctx, "M", i),
                    hyp, [&] {
                        return f == FormationTag::Supersolvable ? ctx.supersolvable : ctx.solvable;
                    });
        }
    }
}

void run_l211_chief(const GroupContext& ctx, const HarnessConfig& cfg, Checks& out) {
    Emitter e{ctx, cfg, out, "L2.11"};
    for (int ll : ctx.normal_idx) {
        if (ctx.lat[ll].size() == 1) continue;
        Subgroup phi = frattini(ctx.lat, ctx.lat[ll]);
        if (!is_chief_factor(ctx.g, phi, ctx.lat[ll])) continue;
        for (int i = 0; i < ctx.count; ++i) {
            if (!ctx.leq(i, ll)) continue;
            bool hyp = ctx.emb[i].hc.holds;
            e.tuple(tok(ctx, "H", i) + "," + tok(ctx, "L", ll), hyp,
                    [&] { return ctx.emb[i].h.holds; });
        }
    }
}

void run_l212_zinf(const GroupContext& ctx, const HarnessConfig& cfg, Checks& out) {
    Emitter e{ctx, cfg, out, "L2.12"};
    for (int p : ctx.primes) {
        Subgroup oup = p_radicals(ctx.g, p).o_upper_p;
        for (int nn : ctx.normal_idx) {
            if (ctx.lat[nn].size() == 1 || !is_prime_power(ctx.lat[nn].size(), p)) continue;
            bool hyp = ctx.leq(nn, ctx.idx_hypercenter);
            e.tuple("p=" + std::to_string(p) + "," + tok(ctx, "P", nn), hyp, [&] {
                Subgroup c = centralizer(ctx.lat[nn]);
                return oup.bits().is_subset_of(c.bits());
            });
        }
    }
}

void run_l213_omega(const GroupContext& ctx, const HarnessConfig& cfg, Checks& out) {
    Emitter e{ctx, cfg, out, "L2.13"};
    const Group& g = *ctx.g;
    for (int p : ctx.primes)
        for (int nn : ctx.normal_idx) {
            if (ctx.lat[nn].size() == 1 || !is_prime_power(ctx.lat[nn].size(), p)) continue;
            const Subgroup& pg = ctx.lat[nn];
            Subgroup om1 = omega(pg, p, 1);
            Subgroup om2 = omega(pg, p, 2);
            bool exempt = p == 2 && !ctx.abelian_flag[nn]; // nonabelian 2-group escape
            auto centralizes = [&](int x, const Subgroup& s) {
                for (int m : s.elements())
                    if (g.mul(x, m) != g.mul(m, x)) return false;
                return true;
            };
            for (int x = 0; x < g.order(); ++x) {
                if (g.element_order(x) % p == 0) continue; // p'-elements only
                std::string base = "p=" + std::to_string(p) + "," + tok(ctx, "P", nn) +
                                   ",g=" + std::to_string(x);
                bool hyp1 = !exempt && centralizes(x, om1);
                e.tuple(base + ",part=Omega1", hyp1, [&] { return centralizes(x, pg); });
                bool hyp2 = centralizes(x, om2);
                e.tuple(base + ",part=Omega2", hyp2, [&] { return centralizes(x, pg); });
            }
        }
}

// --- Theorems ---------------------------------------------------------------

// Existential D-order scan shared by T3.1 / C3.2 / T3.3 / T3.4: every
// subgroup of P of order |D| must be HC in G, and for p = 2 with |P:D| > 2
// every H <= P of order 2|D| carrying D1 normal in H with |D1| = |D|/2 and
// H/D1 cyclic of order 4 must be HC as well.
bool cyclic4_over(const GroupContext& ctx, int h_idx, int d1_size) {
    for (int d1 = 0; d1 < ctx.count; ++d1) {
        if (ctx.lat[d1].size() != d1_size) continue;
        if (!ctx.leq(d1, h_idx) || !ctx.normal_in(d1, h_idx)) continue;
        GroupView v = as_group(ctx.lat[h_idx]);
        Subgroup d1_local = v.restrict_to_view(ctx.lat[d1]);
        auto [q, pi] = quotient(v.group, d1_local);
        if (q->order() == 4 && is_cyclic(*q)) return true;
    }
    return false;
}

bool d_order_works(const GroupContext& ctx, int p_idx, int p, int d) {
    int p_order = ctx.lat[p_idx].size();
    for (int i = 0; i < ctx.count; ++i)
        if (ctx.lat[i].size() == d && ctx.leq(i, p_idx) && !ctx.emb[i].hc.holds) return false;
    if (p == 2 && p_order / d > 2) {
        for (int i = 0; i < ctx.count; ++i) {
            if (ctx.lat[i].size() != 2 * d || !ctx.leq(i, p_idx)) continue;
            if (ctx.emb[i].hc.holds) continue;
            if (cyclic4_over(ctx, i, d / 2)) return false;
        }
    }
    return true;
}

// First admissible order |D| (a p-power with 1 < |D| < |P|), or 0.
int find_admissible_d(const GroupContext& ctx, int p_idx, int p) {
    int p_order = ctx.lat[p_idx].size();
    for (int d = p; d < p_order; d *= p)
        if (d_order_works(ctx, p_idx, p, d)) return d;
    return 0;
}

void run_t31(const GroupContext& ctx, const HarnessConfig& cfg, Checks& out) {
    Emitter e{ctx, cfg, out, "T3.1"};
    if (ctx.primes.empty()) return;
    int p = ctx.primes.front();
    int pi = ctx.sylow.at(p);
    bool hyp;
    std::string witness;
    if (ctx.cyclic_flag[pi]) {
        hyp = true;
        witness = "P cyclic";
    } else {
        int d = find_admissible_d(ctx, pi, p);
        hyp = d > 0;
        if (d > 0) witness = "D=" + std::to_string(d);
    }
    e.tuple("p=" + std::to_string(p) + "," + tok(ctx, "P", pi), hyp,
            [&] { return ctx.p_nilp.at(p); }, std::move(witness));
}

void run_c32(const GroupContext& ctx, const HarnessConfig& cfg, Checks& out) {
    Emitter e{ctx, cfg, out, "C3.2"};
    bool hyp = true;
    std::string witness;
    for (int p : ctx.primes) {
        int pi = ctx.sylow.at(p);
        if (ctx.cyclic_flag[pi]) continue; // "(if exists)": cyclic Sylows impose nothing
        int d = find_admissible_d(ctx, pi, p);
        if (d == 0) {
            hyp = false;
            witness.clear();
            break;
        }
        if (!witness.empty()) witness += ",";
        witness += "p" + std::to_string(p) + ":D=" + std::to_string(d);
    }
    e.tuple("", hyp, [&] { return ctx.tower; }, std::move(witness));
}

// Shared by T3.3 (W = F*(E)) and T3.4 (W = E): the D-condition over the
// noncyclic Sylow subgroups of W, with HC measured in G.
bool sylow_d_condition_over(const GroupContext& ctx, int w_idx, std::string& witness) {
    const Subgroup& w = ctx.lat[w_idx];
    witness.clear();
    for (int q : prime_divisors(w.size())) {
        int target = p_part(w.size(), q);
        int syl = -1;
        for (int i = 0; i < ctx.count; ++i)
            if (ctx.lat[i].size() == target && ctx.leq(i, w_idx)) {
                syl = i;
                break; // lattice order makes this the canonical representative
            }
        if (syl < 0) throw Error("Sylow subgroup of W missing from lattice");
        if (ctx.cyclic_flag[syl]) continue;
        int d = find_admissible_d(ctx, syl, q);
        if (d == 0) {
            witness.clear();
            return false;
        }
        if (!witness.empty()) witness += ",";
        witness += "p" + std::to_string(q) + ":D=" + std::to_string(d);
    }
    return true;
}

void run_t33(const GroupContext& ctx, const HarnessConfig& cfg, Checks& out) {
    for (FormationTag f : {FormationTag::Supersolvable, FormationTag::Solvable}) {
        Emitter e{ctx, cfg, out, "T3.3"};
        for (int nn : ctx.normal_idx) {
            const QuotientData& qd = ctx.quot(nn);
            if (!(f == FormationTag::Supersolvable ? qd.supersolvable : qd.solvable)) continue;
            int w = ctx.fstar_of.at(nn);
            std::string witness;
            bool hyp = sylow_d_condition_over(ctx, w, witness);
            e.tuple(std::string("F=") + formation_name(f) + "," + tok(ctx, "E", nn) + ",Fstar=" +
                        ctx.sub_token(w),
                    hyp,
                    [&] {
                        return f == FormationTag::Supersolvable ? ctx.supersolvable : ctx.solvable;
                    },
                    std::move(witness));
        }
    }
}

void run_t34(const GroupContext& ctx, const HarnessConfig& cfg, Checks& out) {
    for (FormationTag f : {FormationTag::Supersolvable, FormationTag::Solvable}) {
        Emitter e{ctx, cfg, out, "T3.4"};
        for (int nn : ctx.normal_idx) {
            const QuotientData& qd = ctx.quot(nn);
            if (!(f == FormationTag::Supersolvable ? qd.supersolvable : qd.solvable)) continue;
            std::string witness;
            bool hyp = sylow_d_condition_over(ctx, nn, witness);
            e.tuple(std::string("F=") + formation_name(f) + "," + tok(ctx, "E", nn), hyp,
                    [&] {
                        return f == FormationTag::Supersolvable ? ctx.supersolvable : ctx.solvable;
                    },
                    std::move(witness));
        }
    }
}

// Minimal subgroups of W inside the hypercenter plus cyclic order-4 subgroups
// of W all HC in G; shared by T3.5 (W = E) and T3.6 (W = F*(E)).
bool minimal_and_cyclic4_condition(const GroupContext& ctx, int w_idx, std::string& failure) {
    for (int i = 0; i < ctx.count; ++i) {
        if (!ctx.leq(i, w_idx)) continue;
        int sz = ctx.lat[i].size();
        if (is_prime(sz) && !ctx.leq(i, ctx.idx_hypercenter)) {
            failure = ctx.sub_token(i) + " outside hypercenter";
            return false;
        }
        if (sz == 4 && ctx.cyclic_flag[i] && !ctx.emb[i].hc.holds) {
            failure = ctx.sub_token(i) + " not HC";
            return false;
        }
    }
    return true;
}

void run_t35(const GroupContext& ctx, const HarnessConfig& cfg, Checks& out) {
    Emitter e{ctx, cfg, out, "T3.5"};
    for (int nn : ctx.normal_idx) {
        if (!ctx.quot(nn).nilpotent) continue;
        std::string failure;
        bool hyp = minimal_and_cyclic4_condition(ctx, nn, failure);
        e.tuple(tok(ctx, "E", nn), hyp, [&] { return ctx.nilpotent; }, std::move(failure));
    }
}

void run_t36(const GroupContext& ctx, const HarnessConfig& cfg, Checks& out) {
    Emitter e{ctx, cfg, out, "T3.6"};
    for (int nn : ctx.normal_idx) {
        if (!ctx.quot(nn).nilpotent) continue;
        int w = ctx.fstar_of.at(nn);
        std::string failure;
        bool hyp = minimal_and_cyclic4_condition(ctx, w, failure);
        e.tuple(tok(ctx, "E", nn) + ",Fstar=" + ctx.sub_token(w), hyp,
                [&] { return ctx.nilpotent; }, std::move(failure));
    }
}

} // namespace

// ---------------------------------------------------------------------------
// Registry and suite runner

const std::vector<Statement>& statement_registry() {
    static const std::vector<Statement> registry = {
        {"L2.1.1", "H-subgroup and subnormal implies normal", run_l211},
        {"L2.1.2", "H-subgroup of G is an H-subgroup of intermediate K", run_l212},
        {"L2.1.3", "H-subgroup passes to and from quotients by normal N <= H", run_l213},
        {"L2.1.4", "N normalizing: N_G(HN) = N_G(H) and HN is an H-subgroup", run_l214},
        {"L2.2.1", "HC-subgroup of G is an HC-subgroup of intermediate K", run_l221},
        {"L2.2.2", "HC-subgroup passes to and from quotients by normal N <= H", run_l222},
        {"L2.2.3", "HC p-subgroup times coprime normal N stays HC, also mod N", run_l223},
        {"L2.3", "all maximal subgroups of Sylow p (smallest p) HC implies p-nilpotent", run_l23},
        {"L2.4", "H 2-subgroup with 2-group N/C is Sylow 2 of its normal closure", run_l24},
        {"L2.5.1", "odd p: minimal subgroups of P in Z(N_G(P)) implies p-nilpotent", run_l251},
        {"L2.5.2", "p=2: cyclic 2/4-subgroups quasinormal in N_G(P) implies 2-nilpotent",
         run_l252},
        {"L2.6.1", "F*(N) = N n F*(G) for normal N", run_l261},
        {"L2.6.2", "F(G) <= F*(G) = F*(F*(G)); solvable F* collapses to F", run_l262},
        {"L2.6.3", "C_G(F*(G)) <= F(G)", run_l263},
        {"L2.6.4", "G > 1 implies F*(G) > 1, the largest normal quasinilpotent subgroup",
         run_l264},
        {"L2.7", "H normal in normal K and HC implies c-normal", run_l27},
        {"L2.8", "HC but not H p-subgroup forces normal M of index p with G = HM", run_l28},
        {"L2.9", "cyclic normal E with G/E in F implies G in F", run_l29},
        {"L2.10", "index-p M in F with F(G) not below M implies G in F", run_l210},
        {"L2.11", "HC-subgroup below L with L/Phi(L) chief is an H-subgroup", run_l211_chief},
        {"L2.12", "normal p-subgroup inside hypercenter is centralized by O^p(G)", run_l212_zinf},
        {"L2.13", "p'-element centralizing Omega_1 (resp. Omega_2) centralizes P", run_l213_omega},
        {"T3.1", "order-|D| subgroups of Sylow p (smallest p) HC implies p-nilpotent", run_t31},
        {"C3.2", "D-condition on all noncyclic Sylows gives a supersolvable-type tower", run_c32},
        {"T3.3", "D-condition on F*(E) with G/E in F implies G in F", run_t33},
        {"T3.4", "D-condition on E with G/E in F implies G in F", run_t34},
        {"T3.5", "minimal subgroups of E central-ish and cyclic-4 HC force nilpotency", run_t35},
        {"T3.6", "same as T3.5 with F*(E) in place of E", run_t36},
    };
    return registry;
}

const Statement* find_statement(const std::string& id) {
    for (const auto& s : statement_registry())
        if (s.id == id) return &s;
    return nullptr;
}

std::vector<StatementCheck> evaluate_statement(const Statement& stmt, const GroupContext& ctx,
                                               const HarnessConfig& cfg) {
    std::vector<StatementCheck> out;
    try {
        stmt.run(ctx, cfg, out);
    } catch (const OrderCapExceeded& ex) {
        StatementCheck c;
        c.statement = stmt.id;
        c.group = ctx.name;
        c.verdict = Verdict::Skipped;
        c.witness = ex.what();
        out.push_back(std::move(c));
    }
    return out;
}

SuiteReport verify_suite(const std::vector<std::string>& ids,
                         const std::vector<std::pair<GroupSpec, GroupPtr>>& corpus,
                         const HarnessConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<const Statement*> stmts;
    for (const auto& id : ids) {
        const Statement* s = find_statement(id);
        if (!s) throw Error("unknown statement id: " + id);
        stmts.push_back(s);
    }

    int ngroups = int(corpus.size());
    // grid[group][statement]: evaluated checks, or a skip marker when the
    // context itself exceeds caps.
    std::vector<std::vector<std::vector<StatementCheck>>> grid(ngroups);
    std::vector<std::string> context_errors(ngroups);

    auto eval_group = [&](int gi) {
        const auto& [spec, g] = corpus[gi];
        grid[gi].resize(stmts.size());
        try {
            GroupContext ctx = make_group_context(spec.canonical_name(), g, cfg);
            for (std::size_t si = 0; si < stmts.size(); ++si)
                grid[gi][si] = evaluate_statement(*stmts[si], ctx, cfg);
        } catch (const OrderCapExceeded& ex) {
            context_errors[gi] = ex.what();
        }
    };

    int jobs = std::max(1, cfg.jobs);
    if (jobs == 1 || ngroups <= 1) {
        for (int gi = 0; gi < ngroups; ++gi) eval_group(gi);
    } else {
        std::atomic<int> next{0};
        auto worker = [&] {
            for (;;) {
                int gi = next.fetch_add(1);
                if (gi >= ngroups) return;
                eval_group(gi);
            }
        };
        std::vector<std::future<void>> futs;
        for (int j = 0; j < std::min(jobs, ngroups); ++j)
            futs.push_back(std::async(std::launch::async, worker));
        for (auto& f : futs) f.get();
    }

    SuiteReport report;
    report.corpus_version = kCorpusVersion;
    for (std::size_t si = 0; si < stmts.size(); ++si) {
        StatementTally tally;
        for (int gi = 0; gi < ngroups; ++gi) {
            if (!context_errors[gi].empty()) {
                StatementCheck c;
                c.statement = stmts[si]->id;
                c.group = corpus[gi].first.canonical_name();
                c.verdict = Verdict::Skipped;
                c.witness = context_errors[gi];
                report.records.push_back(std::move(c));
                ++tally.skipped;
                continue;
            }
            for (auto& c : grid[gi][si]) {
                switch (c.verdict) {
                case Verdict::Pass: ++tally.pass; break;
                case Verdict::Vacuous: ++tally.vacuous; break;
                case Verdict::Fail: ++tally.fail; break;
                case Verdict::Skipped: ++tally.skipped; break;
                }
                if (!c.hypothesis_holds && c.conclusion_holds && !*c.conclusion_holds)
                    ++tally.contrapositive;
                report.records.push_back(std::move(c));
            }
        }
        report.fail_count += tally.fail;
        report.skip_count += tally.skipped;
        report.tallies.emplace_back(stmts[si]->id, tally);
    }
    auto t1 = std::chrono::steady_clock::now();
    report.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return report;
}

} // namespace hclab
