#include "repdim/orchestrate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include <json.hpp>

namespace repdim {

namespace {

using L = SummandLabel;

Diagram diagram_of(const SummandLabel& label)
{
    switch (label.kind) {
    case L::Kind::A:
        return a_diagram(label.i, label.j);
    case L::Kind::DA:
        return da_diagram(label.i, label.j);
    case L::Kind::U:
        return u_diagram(label.i);
    case L::Kind::X:
        return x_diagram();
    case L::Kind::Chain:
        return x_chain_diagram(label.i);
    case L::Kind::Lambda:
        break;
    }
    throw std::invalid_argument("no diagram for " + label.str());
}

} // namespace

template <class K>
Module<K> named_module(const K& field, const SummandLabel& label, const MonomialAlgebra& algebra)
{
    switch (label.kind) {
    case L::Kind::A:
        return a_module(field, label.i, label.j, algebra);
    case L::Kind::DA:
        return da_module(field, label.i, label.j, algebra);
    case L::Kind::U:
        return u_module(field, label.i, algebra);
    case L::Kind::X:
        return x_module(field, algebra);
    case L::Kind::Lambda:
        return regular_module(field, algebra);
    case L::Kind::Chain:
        return x_chain_module(field, label.i, algebra);
    }
    throw std::invalid_argument("unknown label");
}

std::vector<SummandLabel> mn_labels(int n)
{
    if (n < 0)
        throw std::out_of_range("M_n needs n >= 0");
    std::vector<SummandLabel> out;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) {
            out.push_back(L::da(i, j));
            if (j > 0)
                out.push_back(L::a(i, j));
        }
    out.push_back(L::a(n, 0));
    for (int i = 0; i <= n + 1; ++i)
        out.push_back(L::u(i));
    out.push_back(L::x());
    std::sort(out.begin(), out.end());
    return out;
}

template <class K>
SummandSet<K> build_Mn(const K& field, int n)
{
    const auto alg = an_algebra(n);
    SummandSet<K> set;
    for (const auto& label : mn_labels(n))
        set.items.push_back({label, named_module(field, label, alg)});
    return set;
}

namespace {

template <class K>
struct RecipeEntry {
    Diagram diagram;
    std::string origin;
};

template <class K>
bool isomorphic(const Module<K>& a, const Module<K>& b, std::uint64_t seed)
{
    return find_isomorphism(a, b, seed).isomorphic;
}

} // namespace

template <class K>
RecipeResult<K> build_Mn_by_recipe(const K& field, int n, std::uint64_t seed)
{
    if (n < 1)
        throw std::out_of_range("the recipe needs n >= 1");
    RecipeResult<K> res;
    res.n = n;

    std::vector<RecipeEntry<K>> current;
    for (const auto& label : mn_labels(0))
        current.push_back({diagram_of(label), label.str()});

    for (int k = 1; k <= n; ++k) {
        const auto alg = an_algebra(k);
        const auto old_projective = from_diagram(field, a_diagram(k - 1, 0), alg);
        std::vector<RecipeEntry<K>> next;
        for (const auto& entry : current) {
            const auto base = from_diagram(field, entry.diagram, alg);
            if (!isomorphic(base, old_projective, mix_seed(seed, k)))
                next.push_back(entry);
            for (int w = 0; w < entry.diagram.size(); ++w) {
                if (entry.diagram.has_in_edge(w, 'y'))
                    continue;
                Diagram ext = entry.diagram;
                const int v = ext.add_vertex("t" + std::to_string(k));
                ext.y_edges.emplace_back(v, w);
                const std::string origin = entry.origin + " + vertex above " + entry.diagram.vertices[w];
                try {
                    from_diagram(field, ext, alg);
                    next.push_back({ext, origin});
                } catch (const RelationViolation& e) {
                    if (k == n) {
                        if (entry.diagram.has_out_edge(w, 'x'))
                            res.rejections.push_back(origin + ": would need an x-arrow out of the new vertex (square)");
                        else
                            res.rejections.push_back(origin + ": " + e.what());
                    }
                }
            }
        }
        next.push_back({a_diagram(k, 0), "A[" + std::to_string(k) + ",0] (new projective)"});
        next.push_back({da_diagram(k, 0), "DA[" + std::to_string(k) + ",0] (its dual)"});

        // Dedupe up to isomorphism, first occurrence wins.
        std::vector<RecipeEntry<K>> unique;
        std::vector<Module<K>> unique_modules;
        for (auto& entry : next) {
            auto m = from_diagram(field, entry.diagram, alg);
            bool seen = false;
            for (std::size_t q = 0; q < unique_modules.size() && !seen; ++q)
                seen = isomorphic(m, unique_modules[q], mix_seed(seed, k, q));
            if (!seen) {
                unique_modules.push_back(std::move(m));
                unique.push_back(std::move(entry));
            }
        }
        current = std::move(unique);
    }

    const auto alg = an_algebra(n);
    const auto closed = build_Mn(field, n);
    std::vector<bool> hit(closed.size(), false);
    for (const auto& entry : current) {
        RecipeModule<K> rm{from_diagram(field, entry.diagram, alg), entry.origin, std::nullopt};
        for (std::size_t q = 0; q < closed.size(); ++q)
            if (!hit[q] && isomorphic(rm.module, closed.items[q].module, mix_seed(seed, n, q))) {
                hit[q] = true;
                rm.label = closed.items[q].label;
                break;
            }
        if (!rm.label)
            ++res.unmatched;
        res.modules.push_back(std::move(rm));
    }
    for (std::size_t q = 0; q < closed.size(); ++q)
        if (!hit[q])
            res.missing.push_back(closed.items[q].label);

    const auto prev = mn_labels(n - 1);
    std::vector<SummandLabel> produced;
    for (const auto& rm : res.modules)
        if (rm.label)
            produced.push_back(*rm.label);
    std::sort(produced.begin(), produced.end());
    for (const auto& l : produced)
        (std::binary_search(prev.begin(), prev.end(), l) ? res.kept : res.added).push_back(l);
    for (const auto& l : prev)
        if (!std::binary_search(produced.begin(), produced.end(), l))
            res.removed.push_back(l);
    res.equal = res.unmatched == 0 && res.missing.empty() && res.modules.size() == closed.size();
    return res;
}

namespace {

using Terms = std::vector<std::vector<SummandLabel>>;

struct CaseRule {
    std::string id;
    std::function<bool(int, const SummandLabel&)> applies;
    std::function<Terms(int, const SummandLabel&)> terms;
    std::string note;
};

const std::vector<CaseRule>& rules_n0()
{
    static const std::vector<CaseRule> rules = {
        {"I.1", [](int, const L& t) { return t == L::a(0, 0); },
         [](int, const L&) { return Terms{{L::u(0), L::u(0)}}; }, ""},
        {"I.2", [](int, const L& t) { return t == L::da(0, 0); },
         [](int, const L&) { return Terms{{L::u(1), L::x()}, {L::u(0)}}; }, ""},
        {"I.3", [](int, const L& t) { return t == L::x(); },
         [](int, const L&) { return Terms{{L::a(0, 0)}, {L::u(0)}}; }, ""},
        {"I.4", [](int, const L& t) { return t == L::u(0); },
         [](int, const L&) {
             return Terms{{L::da(0, 0), L::da(0, 0)}, {L::u(1), L::a(0, 0), L::x()}, {L::u(0), L::u(0)}};
         },
         ""},
        {"I.4", [](int, const L& t) { return t == L::u(1); },
         [](int, const L&) { return Terms{{L::a(0, 0)}, {L::u(0)}}; },
         "U[1] is the x<->y mirror of X"},
    };
    return rules;
}

const std::vector<CaseRule>& rules_n()
{
    using K = L::Kind;
    static const std::vector<CaseRule> rules = {
        {"II.1", [](int n, const L& t) { return t == L::a(n, 0); },
         [](int n, const L&) { return Terms{{L::a(n - 1, 1)}}; }, ""},
        {"II.2", [](int, const L& t) { return t == L::x(); },
         [](int n, const L&) { return Terms{{L::u(0), L::a(n, 0)}, {L::a(n - 1, 1)}}; }, ""},
        {"II.3", [](int, const L& t) { return t.kind == K::A && t.j == 1; },
         [](int, const L& t) {
             if (t.i == 0)
                 return Terms{{L::u(1), L::u(0), L::da(1, 0)}, {L::da(0, 1)}};
             return Terms{{L::a(t.i - 1, 2), L::da(t.i + 1, 0)}, {L::da(t.i, 1)}};
         },
         "middle term A[i-1,2] for i > 0 (dimension balance)"},
        {"II.4", [](int, const L& t) { return t.kind == K::A && t.j > 1 && t.i > 0; },
         [](int, const L& t) {
             const int i = t.i, j = t.j;
             return Terms{{L::a(i - 1, j + 1), L::a(i, j - 1), L::da(i + 1, j - 1)},
                          {L::a(i - 1, j), L::da(i, j), L::da(i + 1, j - 2)},
                          {L::da(i, j - 1)}};
         },
         ""},
        {"II.5", [](int, const L& t) { return t.kind == K::A && t.j > 1 && t.i == 0; },
         [](int, const L& t) {
             const int j = t.j;
             return Terms{{L::u(j), L::a(0, j - 1), L::da(1, j - 1)}, {L::u(j - 1), L::u(j + 1), L::da(1, j - 2)},
                          {L::u(j)}};
         },
         ""},
        {"II.6", [](int n, const L& t) { return t == L::da(n, 0); },
         [](int n, const L&) { return Terms{{L::da(n - 1, 1), L::a(n, 0)}, {L::a(n - 1, 1)}}; }, ""},
        {"II.7", [](int n, const L& t) { return t.kind == K::DA && t.j == 0 && t.i > 0 && t.i < n; },
         [](int, const L& t) { return Terms{{L::da(t.i - 1, 1), L::a(t.i, 1)}, {L::a(t.i - 1, 2)}}; }, ""},
        {"II.8", [](int, const L& t) { return t == L::da(0, 0); },
         [](int n, const L&) {
             return Terms{{L::x(), L::a(0, 1)}, {L::u(0), L::u(0), L::a(n, 0)}, {L::a(n - 1, 1)}};
         },
         ""},
        {"II.9", [](int n, const L& t) { return t.kind == K::DA && t.i > 0 && t.j > 0 && t.i + t.j == n; },
         [](int, const L& t) {
             return Terms{{L::da(t.i - 1, t.j + 1), L::da(t.i, t.j - 1)}, {L::da(t.i - 1, t.j)}};
         },
         ""},
        {"II.10", [](int, const L& t) { return t.kind == K::DA && t.i == 0 && t.j > 0; },
         [](int n, const L& t) {
             if (t.j == n)
                 return Terms{{L::u(n + 1), L::da(0, n - 1)}, {L::u(n)}};
             return Terms{{L::da(0, t.j - 1), L::a(0, t.j + 1)}, {L::a(0, t.j)}};
         },
         ""},
        {"II.11", [](int n, const L& t) { return t.kind == K::DA && t.i > 0 && t.j > 0 && t.i + t.j < n; },
         [](int, const L& t) {
             const int i = t.i, j = t.j;
             return Terms{{L::da(i, j - 1), L::da(i - 1, j + 1), L::a(i, j + 1)},
                          {L::da(i - 1, j), L::a(i, j), L::a(i - 1, j + 2)},
                          {L::a(i - 1, j + 1)}};
         },
         ""},
        {"II.12", [](int, const L& t) { return t == L::u(0); },
         [](int n, const L&) {
             return Terms{{L::da(0, n), L::da(0, 0)}, {L::u(n + 1), L::a(0, n), L::x()}, {L::u(n), L::u(0)}};
         },
         "second summand of degree 1 read as DA[0,0]"},
        {"II.13", [](int, const L& t) { return t == L::u(1); },
         [](int n, const L&) {
             return Terms{{L::da(0, 1), L::a(0, n)}, {L::u(n), L::a(1, n - 1), L::da(0, 0)}, {L::a(0, n)}};
         },
         ""},
        {"II.14", [](int n, const L& t) { return t.kind == K::U && t.i > 1 && t.i < n + 1; },
         [](int n, const L& t) {
             const int i = t.i;
             return Terms{{L::u(i - 1), L::da(0, i), L::a(i - 1, n - i + 1)},
                          {L::a(i, n - i), L::a(i - 2, n - i + 2), L::da(0, i - 1)},
                          {L::a(i - 1, n - i + 1)}};
         },
         ""},
        {"II.15", [](int n, const L& t) { return t == L::u(n + 1); },
         [](int n, const L&) { return Terms{{L::u(n), L::a(n, 0)}, {L::a(n - 1, 1)}}; }, ""},
    };
    return rules;
}

std::vector<SummandLabel> sorted(std::vector<SummandLabel> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

std::string terms_string(const Terms& terms)
{
    std::string s;
    for (std::size_t d = 0; d < terms.size(); ++d)
        s += (d ? "; " : "") + std::string("deg") + std::to_string(d + 1) + " " + multiset_string(terms[d]);
    return s.empty() ? "(none)" : s;
}

} // namespace

std::vector<FixtureCase> expected_resolutions(int n)
{
    const auto& rules = n == 0 ? rules_n0() : rules_n();
    std::vector<FixtureCase> out;
    for (const auto& label : mn_labels(n)) {
        const CaseRule* found = nullptr;
        for (const auto& r : rules)
            if (r.applies(n, label)) {
                if (found)
                    throw std::logic_error("fixture cases " + found->id + " and " + r.id + " both apply to " +
                                           label.str());
                found = &r;
            }
        if (!found)
            throw std::logic_error("no fixture case applies to " + label.str());
        Terms terms = found->terms(n, label);
        for (auto& t : terms)
            t = sorted(t);
        out.push_back({found->id, label, std::move(terms), found->note});
    }
    return out;
}

std::vector<FixtureComparison> compare_fixtures(int n, const std::vector<ResolutionCertificate>& computed)
{
    const auto expected = expected_resolutions(n);
    std::vector<FixtureComparison> out;
    std::map<SummandLabel, const ResolutionCertificate*> by_label;
    for (const auto& r : computed)
        by_label[r.target] = &r;
    for (const auto& fx : expected) {
        FixtureComparison cmp{fx.id, fx.target, "match", ""};
        auto it = by_label.find(fx.target);
        if (it == by_label.end()) {
            cmp.status = "failure";
            cmp.detail = "no computed resolution for " + fx.target.str();
            out.push_back(cmp);
            continue;
        }
        const auto& rc = *it->second;
        Terms got;
        for (const auto& t : rc.terms)
            got.push_back(sorted(t.summands));
        if (got != fx.terms) {
            cmp.detail = "expected " + terms_string(fx.terms) + "; computed " + terms_string(got);
            cmp.status = (n > 0 && rc.pd <= 3) ? "warning" : "failure";
        }
        out.push_back(cmp);
        by_label.erase(it);
    }
    for (const auto& [label, rc] : by_label)
        out.push_back({"-", label, "failure", "summand " + label.str() + " is not part of M_" + std::to_string(n)});
    return out;
}

template <class K>
WitnessReport witness_infinite_type(const K& field, const MonomialAlgebra& algebra, int count, std::uint64_t seed)
{
    if (count < 2)
        throw std::invalid_argument("witness count must be at least 2");
    WitnessReport rep;
    rep.ok = true;
    for (int l = 1; l <= count; ++l) {
        const auto z = zigzag_module(field, l, algebra);
        const auto cert = is_indecomposable(z, mix_seed(seed, static_cast<std::uint64_t>(l)));
        if (!cert.indecomposable) {
            rep.ok = false;
            rep.detail = "zigzag of length " + std::to_string(l) + " is decomposable";
            return rep;
        }
        if (!rep.dims.empty() && z.dim() <= rep.dims.back()) {
            rep.ok = false;
            rep.detail = "dimensions not strictly increasing";
            return rep;
        }
        rep.dims.push_back(z.dim());
    }
    rep.detail = std::to_string(count) + " certified indecomposables over " + algebra.name();
    return rep;
}

namespace {

template <class K>
SummandSet<K> apply_controls(SummandSet<K> set, const VerificationOptions& opt)
{
    for (const auto& d : opt.drop) {
        auto idx = set.index_of(d);
        if (!idx)
            throw std::invalid_argument("cannot drop " + d.str() + ": not a summand");
        set.items.erase(set.items.begin() + static_cast<std::ptrdiff_t>(*idx));
    }
    for (const auto& d : opt.duplicate) {
        auto idx = set.index_of(d);
        if (!idx)
            throw std::invalid_argument("cannot duplicate " + d.str() + ": not a summand");
        set.items.insert(set.items.begin() + static_cast<std::ptrdiff_t>(*idx) + 1, set.items[*idx]);
    }
    return set;
}

// Shared tail of every verification: certification, gen-cogen, resolutions.
// Returns false when the run stopped early (cert.verdict already set).
template <class K>
bool certify_and_resolve(VerificationCertificate& cert, const SummandSet<K>& set, const MonomialAlgebra& algebra,
                         const VerificationOptions& opt)
{
    for (const auto& s : set.items)
        cert.summands.emplace_back(s.label, s.module.dim());
    auto stop = [&](const std::string& verdict, const std::string& why) {
        cert.verdict = verdict;
        cert.failure = why;
        return false;
    };
    try {
        cert.summand_check = certify_summands(set, opt.seed);
        if (!cert.summand_check.ok) {
            for (const auto& line : cert.summand_check.indecomposability)
                if (line.find("undecided") != std::string::npos)
                    return stop("undecided", "summands: " + line);
            for (const auto& line : cert.summand_check.problems)
                if (line.find("undecided") != std::string::npos)
                    return stop("undecided", "summands: " + line);
            std::string why = "summands: ";
            if (!cert.summand_check.problems.empty())
                why += cert.summand_check.problems.front();
            else
                for (const auto& line : cert.summand_check.indecomposability)
                    if (line.find("decomposable (") != std::string::npos) {
                        why += line;
                        break;
                    }
            return stop("failed", why);
        }
        cert.gen_cogen = check_generator_cogenerator(set, algebra, opt.seed);
        if (!cert.gen_cogen.generator)
            return stop("failed", "gen_cogen: missing projective (" + cert.gen_cogen.generator_witness + ")");
        if (!cert.gen_cogen.cogenerator)
            return stop("failed", "gen_cogen: missing injective (" + cert.gen_cogen.cogenerator_witness + ")");

        const auto table = build_hom_table(set, opt.jobs);
        cert.resolutions = resolve_all(set, table, opt.cap, opt.jobs);
    } catch (const CheckFailure& e) {
        return stop("failed", e.what());
    } catch (const CapExceeded& e) {
        return stop("undecided", std::string("cap: ") + e.what());
    } catch (const Undecided& e) {
        return stop("undecided", e.what());
    }
    cert.global_dimension = global_dimension(cert.resolutions);
    for (const auto& r : cert.resolutions)
        if (r.pd == *cert.global_dimension) {
            cert.attained_by = r.target;
            break;
        }
    return true;
}

} // namespace

template <class K>
VerificationCertificate verify_An(const K& field, int n, const VerificationOptions& opt)
{
    if (n < 0)
        throw std::out_of_range("n must be >= 0");
    VerificationCertificate cert;
    cert.kind = "an";
    cert.n = n;
    cert.field = field.name();
    cert.seed = opt.seed;
    const auto alg = an_algebra(n);
    const auto set = apply_controls(build_Mn(field, n), opt);

    std::vector<SummandLabel> tested = set.labels();
    std::sort(tested.begin(), tested.end());
    if (n >= 1) {
        const auto recipe = build_Mn_by_recipe(field, n, opt.seed);
        std::vector<SummandLabel> produced;
        for (const auto& rm : recipe.modules)
            if (rm.label)
                produced.push_back(*rm.label);
        std::sort(produced.begin(), produced.end());
        cert.recipe_equal = recipe.equal && produced == tested;
        if (!recipe.equal)
            cert.recipe_notes.push_back("recipe disagrees with the closed form");
        if (produced != tested)
            cert.recipe_notes.push_back("recipe " + multiset_string(produced) + " vs tested set " +
                                        multiset_string(tested));
    }
    cert.witnesses = witness_infinite_type(field, alg, opt.witness_count, opt.seed);

    if (!certify_and_resolve(cert, set, alg, opt))
        return cert;

    cert.fixtures = compare_fixtures(n, cert.resolutions);
    auto fail = [&](const std::string& why) {
        cert.verdict = "failed";
        cert.failure = why;
        return cert;
    };
    if (*cert.global_dimension > 3)
        return fail("global dimension " + std::to_string(*cert.global_dimension) + " exceeds 3");
    for (const auto& fx : cert.fixtures)
        if (fx.status == "failure")
            return fail("fixtures: " + fx.id + " " + fx.target.str() + ": " + fx.detail);
    if (cert.recipe_equal && !*cert.recipe_equal)
        return fail("recipe_diff: " + (cert.recipe_notes.empty() ? std::string() : cert.recipe_notes.front()));
    if (!cert.witnesses->ok)
        return fail("witnesses: " + cert.witnesses->detail);
    if (*cert.global_dimension != 3)
        return fail("global dimension " + std::to_string(*cert.global_dimension) + " is not 3");
    cert.verdict = "theorem-checked";
    return cert;
}

template <class K>
VerificationCertificate verify_Lambda(const K& field, int n, const VerificationOptions& opt)
{
    if (n < 0)
        throw std::out_of_range("n must be >= 0");
    VerificationCertificate cert;
    cert.kind = "lambda";
    cert.n = n;
    cert.field = field.name();
    cert.seed = opt.seed;
    const auto lam = lambda_algebra(n);
    SummandSet<K> set;
    for (auto& s : build_Mn(field, n).items)
        set.items.push_back({s.label, inflate(s.module)});
    set.items.push_back({L::lambda(), regular_module(field, lam)});
    set = apply_controls(std::move(set), opt);
    cert.witnesses = witness_infinite_type(field, lam, opt.witness_count, opt.seed);

    if (!certify_and_resolve(cert, set, lam, opt))
        return cert;
    if (*cert.global_dimension > 3) {
        cert.verdict = "failed";
        cert.failure = "global dimension " + std::to_string(*cert.global_dimension) + " exceeds 3";
        return cert;
    }
    if (!cert.witnesses->ok) {
        cert.verdict = "failed";
        cert.failure = "witnesses: " + cert.witnesses->detail;
        return cert;
    }
    cert.verdict = "theorem-checked";
    return cert;
}

template <class K>
VerificationCertificate auslander_sanity(const K& field, int m, const VerificationOptions& opt)
{
    if (m < 1)
        throw std::out_of_range("m must be >= 1");
    VerificationCertificate cert;
    cert.kind = "auslander";
    cert.n = m;
    cert.field = field.name();
    cert.seed = opt.seed;
    const auto alg = custom_algebra(m, 1);
    SummandSet<K> set;
    for (int l = 1; l <= m; ++l)
        set.items.push_back({L::chain(l), x_chain_module(field, l, alg)});
    set = apply_controls(std::move(set), opt);
    if (!certify_and_resolve(cert, set, alg, opt))
        return cert;
    if (*cert.global_dimension > 2) {
        cert.verdict = "failed";
        cert.failure = "global dimension " + std::to_string(*cert.global_dimension) + " exceeds 2";
        return cert;
    }
    cert.verdict = "theorem-checked";
    return cert;
}

std::string certificate_json(const VerificationCertificate& cert)
{
    using json = nlohmann::ordered_json;
    json j;
    j["algebra"] = {{"kind", cert.kind}, {"n", cert.n}, {"field", cert.field}};
    j["summands"] = json::array();
    for (const auto& [label, dim] : cert.summands)
        j["summands"].push_back({{"label", label.str()}, {"dim", dim}});
    j["resolutions"] = json::array();
    for (const auto& r : cert.resolutions) {
        json terms = json::array();
        for (const auto& t : r.terms) {
            json labels = json::array();
            for (const auto& l : sorted(t.summands))
                labels.push_back(l.str());
            terms.push_back(labels);
        }
        j["resolutions"].push_back({{"target", r.target.str()}, {"pd", r.pd}, {"terms", terms}});
    }
    j["global_dimension"] = cert.global_dimension ? json(*cert.global_dimension) : json(nullptr);

    json checks;
    checks["gen_cogen"] = {{"pass", cert.gen_cogen.ok()},
                           {"projective", cert.gen_cogen.generator_witness},
                           {"injective", cert.gen_cogen.cogenerator_witness}};
    json fixtures = json::array();
    for (const auto& f : cert.fixtures) {
        json entry = {{"case", f.id}, {"target", f.target.str()}, {"status", f.status}};
        if (!f.detail.empty())
            entry["detail"] = f.detail;
        fixtures.push_back(entry);
    }
    checks["fixtures"] = fixtures;
    if (cert.recipe_equal) {
        checks["recipe_diff"] = {{"equal", *cert.recipe_equal}, {"notes", cert.recipe_notes}};
    } else {
        checks["recipe_diff"] = nullptr;
    }
    if (cert.witnesses) {
        checks["witnesses"] = {{"pass", cert.witnesses->ok}, {"dims", cert.witnesses->dims}};
    } else {
        checks["witnesses"] = nullptr;
    }
    checks["summands"] = {{"pass", cert.summand_check.ok},
                          {"indecomposable", cert.summand_check.indecomposability},
                          {"pairs_checked", cert.summand_check.pairs_checked},
                          {"problems", cert.summand_check.problems}};
    std::size_t steps = 0;
    for (const auto& r : cert.resolutions)
        steps += r.checks.size();
    checks["resolution_checks_passed"] = steps;
    checks["gl_dim_attained_by"] = cert.attained_by ? json(cert.attained_by->str()) : json(nullptr);
    checks["failure"] = cert.failure.empty() ? json(nullptr) : json(cert.failure);
    j["checks"] = checks;
    j["verdict"] = cert.verdict;
    j["seed"] = cert.seed;
    j["runtime_ms"] = cert.runtime_ms ? json(*cert.runtime_ms) : json(nullptr);
    return j.dump(2) + "\n";
}

#define REPDIM_INSTANTIATE_ORCHESTRATE(K)                                                                              \
    template Module<K> named_module<K>(const K&, const SummandLabel&, const MonomialAlgebra&);                         \
    template SummandSet<K> build_Mn<K>(const K&, int);                                                                 \
    template RecipeResult<K> build_Mn_by_recipe<K>(const K&, int, std::uint64_t);                                      \
    template WitnessReport witness_infinite_type<K>(const K&, const MonomialAlgebra&, int, std::uint64_t);             \
    template VerificationCertificate verify_An<K>(const K&, int, const VerificationOptions&);                          \
    template VerificationCertificate verify_Lambda<K>(const K&, int, const VerificationOptions&);                      \
    template VerificationCertificate auslander_sanity<K>(const K&, int, const VerificationOptions&);

REPDIM_INSTANTIATE_ORCHESTRATE(Rationals)
REPDIM_INSTANTIATE_ORCHESTRATE(PrimeField)

} // namespace repdim
