#include "wpss/polycyclic.hpp"

#include <algorithm>
#include <array>

#include "wpss/error.hpp"

namespace wpss {

PolycyclicPresentation::PolycyclicPresentation(std::size_t rank)
    : rank_(rank), conj_(rank * rank), inv_conj_(rank * rank), power_(rank) {
    if (rank == 0) throw ValidationError("polycyclic presentation needs at least one generator");
}

void PolycyclicPresentation::check_pair(std::uint32_t i, std::uint32_t j) const {
    if (!(i < j && j < rank_)) throw ValidationError("conjugation rules need generator indices i < j < k");
}

void PolycyclicPresentation::check_later(const Word& w, std::uint32_t after) const {
    for (const auto& l : w)
        if (l.generator <= after || l.generator >= rank_)
            throw ValidationError("rule right-hand sides must use only later generators");
}

void PolycyclicPresentation::set_conjugate(std::uint32_t i, std::uint32_t j, Word w) {
    check_pair(i, j);
    check_later(w, i);
    conj_[i * rank_ + j] = free_reduce(w);
}

void PolycyclicPresentation::set_inverse_conjugate(std::uint32_t i, std::uint32_t j, Word v) {
    check_pair(i, j);
    check_later(v, i);
    inv_conj_[i * rank_ + j] = free_reduce(v);
}

void PolycyclicPresentation::set_power(std::uint32_t l, std::uint32_t exponent, Word tail) {
    if (l >= rank_) throw ValidationError("power rule for an unknown generator");
    if (exponent == 0) throw ValidationError("power exponents must be positive");
    check_later(tail, l);
    power_[l] = PowerRule{exponent, free_reduce(tail)};
}

void PolycyclicPresentation::clear_conjugate(std::uint32_t i, std::uint32_t j) {
    check_pair(i, j);
    conj_[i * rank_ + j].reset();
}

void PolycyclicPresentation::clear_inverse_conjugate(std::uint32_t i, std::uint32_t j) {
    check_pair(i, j);
    inv_conj_[i * rank_ + j].reset();
}

void PolycyclicPresentation::clear_power(std::uint32_t l) { power_.at(l).reset(); }

bool NormalForm::is_trivial() const noexcept {
    return std::all_of(exponents.begin(), exponents.end(), [](std::int64_t e) { return e == 0; });
}

Word NormalForm::to_word() const {
    Word w;
    for (std::uint32_t g = 0; g < exponents.size(); ++g) {
        const Letter l{g, static_cast<std::int8_t>(exponents[g] < 0 ? -1 : 1)};
        for (std::int64_t r = 0; r < (exponents[g] < 0 ? -exponents[g] : exponents[g]); ++r) w.push_back(l);
    }
    return w;
}

namespace {

std::string gen_label(std::uint32_t g) { return "x" + std::to_string(g + 1); }

void push_word(std::vector<Letter>& pending, const Word& w) {
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) pending.push_back(*it);
}

}  // namespace

CollectionResult try_collect(const PolycyclicPresentation& p, const Word& w, std::uint64_t step_cap) {
    const auto k = p.rank();
    CollectionResult res;
    res.form.exponents.assign(k, 0);
    auto& e = res.form.exponents;
    if (w.generator_bound() > k) throw ValidationError("word uses a generator outside the presentation");

    std::vector<Letter> pending;
    push_word(pending, w);
    std::vector<Letter> tail;
    while (!pending.empty()) {
        if (++res.stats.work > step_cap) {
            res.status = CollectionResult::Status::budget;
            res.note = "rewrite-step budget of " + std::to_string(step_cap) + " exhausted";
            return res;
        }
        const Letter l = pending.back();
        pending.pop_back();
        const auto g = l.generator;
        const auto& pw = p.power(g);

        if (l.sign < 0 && pw) {
            // x_g^-1 = x_g^{r-1} u_g^-1
            push_word(pending, invert(pw->tail));
            for (std::uint32_t r = 1; r < pw->exponent; ++r) pending.push_back(pos(g));
            continue;
        }

        // x^e_1..x^e_g * T * x_g^s = x^e_1..x_g^{e_g+s} * T^{x_g^s}
        tail.clear();
        for (std::uint32_t h = g + 1; h < k; ++h) {
            if (e[h] == 0) continue;
            const auto& rule = l.sign > 0 ? p.conjugate(g, h) : p.inverse_conjugate(g, h);
            if (!rule) {
                res.status = CollectionResult::Status::missing_rule;
                res.note = "no rule for " + gen_label(h) + "^(" + gen_label(g) + (l.sign > 0 ? "" : "^-1") + ")";
                return res;
            }
            const Word piece = e[h] > 0 ? *rule : invert(*rule);
            for (std::int64_t r = 0; r < (e[h] > 0 ? e[h] : -e[h]); ++r) tail.insert(tail.end(), piece.begin(), piece.end());
            e[h] = 0;
        }
        e[g] += l.sign;
        for (auto it = tail.rbegin(); it != tail.rend(); ++it) pending.push_back(*it);
        if (pw && e[g] == static_cast<std::int64_t>(pw->exponent)) {
            e[g] = 0;
            push_word(pending, pw->tail);
        }
        res.stats.peak_frontier = std::max<std::uint64_t>(res.stats.peak_frontier, pending.size());
    }
    return res;
}

NormalForm collect(const PolycyclicPresentation& p, const Word& w, std::uint64_t step_cap) {
    auto res = try_collect(p, w, step_cap);
    switch (res.status) {
        case CollectionResult::Status::ok: return std::move(res.form);
        case CollectionResult::Status::budget: throw BudgetError("collection: " + res.note);
        case CollectionResult::Status::missing_rule: throw ValidationError("collection: " + res.note);
    }
    return {};
}

Decision is_identity_pc(const PolycyclicPresentation& p, const Word& w, std::uint64_t step_cap) {
    const auto res = try_collect(p, w, step_cap);
    Decision d;
    d.stats = res.stats;
    if (res.status == CollectionResult::Status::ok)
        d.verdict = res.form.is_trivial() ? Verdict::identity : Verdict::non_identity;
    else
        d.note = res.note;
    return d;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> derive_inverse_conjugates(PolycyclicPresentation& p,
                                                                                 std::uint64_t step_cap) {
    const auto k = static_cast<std::uint32_t>(p.rank());
    std::vector<std::pair<std::uint32_t, std::uint32_t>> failed;

    // phi = conjugation by x_i on <x_{i+1}..x_k>; the inverse rule is
    // phi^-1(x_j), assembled from phi^-1(x_h) for h > j.
    auto pull_back = [&](std::uint32_t i, const NormalForm& nf, std::uint32_t above) -> std::optional<Word> {
        Word out;
        for (std::uint32_t h = above + 1; h < k; ++h) {
            if (nf.exponents[h] == 0) continue;
            const auto& v = p.inverse_conjugate(i, h);
            if (!v) return std::nullopt;
            out.append(power(*v, nf.exponents[h]));
        }
        return out;
    };

    for (std::uint32_t i = k; i-- > 0;) {
        if (p.power(i)) continue;
        for (std::uint32_t j = k; j-- > i + 1;) {
            if (p.inverse_conjugate(i, j)) continue;
            const auto& w = p.conjugate(i, j);
            if (!w) {
                failed.emplace_back(i, j);
                continue;
            }
            const auto image = try_collect(p, *w, step_cap);
            if (image.status != CollectionResult::Status::ok) {
                failed.emplace_back(i, j);
                continue;
            }
            const auto& ex = image.form.exponents;
            const bool shape_ok = std::all_of(ex.begin() + i + 1, ex.begin() + j, [](std::int64_t x) { return x == 0; }) &&
                                  (ex[j] == 1 || ex[j] == -1);
            if (!shape_ok) {
                failed.emplace_back(i, j);
                continue;
            }
            NormalForm rest = image.form;
            for (std::uint32_t h = 0; h <= j; ++h) rest.exponents[h] = 0;

            std::optional<Word> v;
            if (ex[j] == 1) {
                // phi(x_j) = x_j t  =>  phi^-1(x_j) = x_j phi^-1(t^-1)
                const auto t_inv = try_collect(p, invert(rest.to_word()), step_cap);
                if (t_inv.status == CollectionResult::Status::ok)
                    if (auto back = pull_back(i, t_inv.form, j)) v = concat(Word{pos(j)}, *back);
            } else {
                // phi(x_j) = x_j^-1 t  =>  phi^-1(x_j) = phi^-1(t) x_j^-1
                if (auto back = pull_back(i, rest, j)) v = concat(*back, Word{neg(j)});
            }
            if (!v) {
                failed.emplace_back(i, j);
                continue;
            }
            const auto normal = try_collect(p, *v, step_cap);
            if (normal.status != CollectionResult::Status::ok) {
                failed.emplace_back(i, j);
                continue;
            }
            p.set_inverse_conjugate(i, j, normal.form.to_word());

            // x_i^-1 v x_i must collect to x_j.
            Word check{neg(i)};
            check.append(normal.form.to_word());
            check.push_back(pos(i));
            const auto verified = try_collect(p, check, step_cap);
            NormalForm expected;
            expected.exponents.assign(k, 0);
            expected.exponents[j] = 1;
            if (verified.status != CollectionResult::Status::ok || !(verified.form == expected)) {
                p.clear_inverse_conjugate(i, j);
                failed.emplace_back(i, j);
            }
        }
    }
    return failed;
}

std::size_t distributable_relator_count(const PolycyclicPresentation& p) {
    const auto k = static_cast<std::uint32_t>(p.rank());
    std::size_t count = 0;
    for (std::uint32_t i = 0; i < k; ++i) {
        if (p.power(i)) ++count;
        for (std::uint32_t j = i + 1; j < k; ++j)
            if (p.conjugate(i, j)) ++count;
    }
    return count;
}

GroupPresentation to_group_presentation(const PolycyclicPresentation& p, const Alphabet& names,
                                        bool include_inverse_rules) {
    const auto k = static_cast<std::uint32_t>(p.rank());
    if (names.size() != k) throw ValidationError("alphabet size does not match the polycyclic rank");
    GroupPresentation out;
    out.generators = names;
    out.family = Family::polycyclic;
    out.public_facts = PublicFacts::none;
    auto add = [&](Word w) { out.relators.push_back(Relator{out.relators.size() + 1, free_reduce(w)}); };

    for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = i + 1; j < k; ++j)
            if (const auto& w = p.conjugate(i, j)) add(concat(Word{neg(i), pos(j), pos(i)}, invert(*w)));
    if (include_inverse_rules)
        for (std::uint32_t i = 0; i < k; ++i)
            for (std::uint32_t j = i + 1; j < k; ++j)
                if (const auto& v = p.inverse_conjugate(i, j)) add(concat(Word{pos(i), pos(j), neg(i)}, invert(*v)));
    for (std::uint32_t l = 0; l < k; ++l)
        if (const auto& pw = p.power(l)) add(concat(power(Word{pos(l)}, pw->exponent), invert(pw->tail)));
    return out;
}

PolycyclicPresentation polycyclic_from_presentation(const GroupPresentation& gp, bool allow_partial) {
    if (gp.family != Family::polycyclic) throw ValidationError("presentation is not tagged as polycyclic");
    const auto k = static_cast<std::uint32_t>(gp.generators.size());
    PolycyclicPresentation p(k);

    auto rest_from = [](const Word& w, std::size_t start) {
        return invert(Word(std::vector<Letter>(w.begin() + static_cast<std::ptrdiff_t>(start), w.end())));
    };
    auto all_after = [](const Word& w, std::uint32_t g) {
        return std::all_of(w.begin(), w.end(), [g](Letter l) { return l.generator > g; });
    };

    for (const auto& r : gp.relators) {
        const auto& w = r.word;
        const std::string where = "relator " + std::to_string(r.index);
        if (w.size() >= 3 && w[0].generator == w[2].generator && w[0].generator < w[1].generator &&
            w[1].sign > 0 && w[0].sign == -w[2].sign) {
            const auto i = w[0].generator;
            const auto j = w[1].generator;
            const Word rhs = rest_from(w, 3);
            if (!all_after(rhs, i)) throw ValidationError(where + ": conjugation rule uses earlier generators");
            if (w[0].sign < 0) {
                if (p.conjugate(i, j)) throw ValidationError(where + ": duplicate conjugation rule");
                p.set_conjugate(i, j, rhs);
            } else {
                if (p.inverse_conjugate(i, j)) throw ValidationError(where + ": duplicate inverse conjugation rule");
                p.set_inverse_conjugate(i, j, rhs);
            }
            continue;
        }
        const auto l = w[0].generator;
        std::size_t run = 0;
        while (run < w.size() && w[run] == pos(l)) ++run;
        const Word rhs = rest_from(w, run);
        if (run == 0 || !all_after(rhs, l)) throw ValidationError(where + ": not of polycyclic shape");
        if (p.power(l)) throw ValidationError(where + ": duplicate power rule");
        p.set_power(l, static_cast<std::uint32_t>(run), rhs);
    }

    if (!allow_partial) {
        for (std::uint32_t i = 0; i < k; ++i)
            for (std::uint32_t j = i + 1; j < k; ++j)
                if (!p.conjugate(i, j))
                    throw ValidationError("missing conjugation relator for (" + gp.generators.name(i) + ", " +
                                          gp.generators.name(j) + ")");
    }
    const auto failed = derive_inverse_conjugates(p);
    if (!allow_partial && !failed.empty())
        throw ValidationError("cannot derive the inverse conjugation rule for (" +
                              gp.generators.name(failed.front().first) + ", " +
                              gp.generators.name(failed.front().second) + ")");
    return p;
}

BuiltinPolycyclic builtin_dihedral(std::uint32_t q) {
    if (q < 2) throw ValidationError("dihedral builtin needs q >= 2");
    PolycyclicPresentation p(2);
    p.set_conjugate(0, 1, Word{neg(1)});
    p.set_inverse_conjugate(0, 1, Word{neg(1)});
    p.set_power(0, 2, {});
    p.set_power(1, q, {});
    // Symmetries of a regular q-gon acting on vertex labels.
    auto oracle = [q](const Word& w) {
        std::vector<std::uint32_t> perm(q);
        for (std::uint32_t v = 0; v < q; ++v) perm[v] = v;
        for (const auto& l : w) {
            for (auto& v : perm) {
                if (l.generator == 0)
                    v = (q - v) % q;
                else
                    v = l.sign > 0 ? (v + 1) % q : (v + q - 1) % q;
            }
        }
        for (std::uint32_t v = 0; v < q; ++v)
            if (perm[v] != v) return false;
        return true;
    };
    return BuiltinPolycyclic{"dihedral", "q=" + std::to_string(q), std::move(p), oracle};
}

BuiltinPolycyclic builtin_heisenberg() {
    PolycyclicPresentation p(3);
    p.set_conjugate(0, 1, Word{pos(1), neg(2)});
    p.set_conjugate(0, 2, Word{pos(2)});
    p.set_conjugate(1, 2, Word{pos(2)});
    p.set_inverse_conjugate(0, 1, Word{pos(1), pos(2)});
    p.set_inverse_conjugate(0, 2, Word{pos(2)});
    p.set_inverse_conjugate(1, 2, Word{pos(2)});
    // x1 = I + E12, x2 = I + E23, x3 = I + E13 over the integers.
    auto oracle = [](const Word& w) {
        using Mat = std::array<std::array<std::int64_t, 3>, 3>;
        Mat acc{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
        for (const auto& l : w) {
            Mat step{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
            const std::int64_t s = l.sign;
            if (l.generator == 0) step[0][1] = s;
            if (l.generator == 1) step[1][2] = s;
            if (l.generator == 2) step[0][2] = s;
            Mat next{};
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c)
                    for (int q = 0; q < 3; ++q) next[r][c] += acc[r][q] * step[q][c];
            acc = next;
        }
        return acc == Mat{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    };
    return BuiltinPolycyclic{"heisenberg", "", std::move(p), oracle};
}

BuiltinPolycyclic builtin_abelian(const std::vector<std::uint32_t>& orders) {
    if (orders.empty()) throw ValidationError("abelian builtin needs at least one factor");
    const auto k = static_cast<std::uint32_t>(orders.size());
    PolycyclicPresentation p(k);
    std::string params = "orders=";
    for (std::uint32_t i = 0; i < k; ++i) {
        if (i) params += ',';
        params += std::to_string(orders[i]);
        if (orders[i] == 1) throw ValidationError("abelian builtin: trivial factors are not allowed");
        if (orders[i] != 0) p.set_power(i, orders[i], {});
        for (std::uint32_t j = i + 1; j < k; ++j) {
            p.set_conjugate(i, j, Word{pos(j)});
            p.set_inverse_conjugate(i, j, Word{pos(j)});
        }
    }
    auto oracle = [orders](const Word& w) {
        std::vector<std::int64_t> sums(orders.size(), 0);
        for (const auto& l : w) sums[l.generator] += l.sign;
        for (std::size_t i = 0; i < orders.size(); ++i) {
            const std::int64_t r = orders[i];
            if (r == 0 ? sums[i] != 0 : sums[i] % r != 0) return false;
        }
        return true;
    };
    return BuiltinPolycyclic{"abelian", params, std::move(p), oracle};
}

std::vector<BuiltinPolycyclic> builtin_presentations() {
    std::vector<BuiltinPolycyclic> out;
    out.push_back(builtin_dihedral(4));
    out.push_back(builtin_heisenberg());
    out.push_back(builtin_abelian({2, 3}));
    return out;
}

}  // namespace wpss
