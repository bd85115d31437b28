// Python bindings. Everything crosses the boundary as the same text the
// file formats use, so Python and the CLI interoperate through files.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <optional>

#include "wpss/analysis.hpp"
#include "wpss/combiner.hpp"
#include "wpss/dealer.hpp"
#include "wpss/error.hpp"
#include "wpss/message.hpp"

namespace py = pybind11;
using namespace wpss;

namespace {

Budget budget_or_env(std::optional<std::uint64_t> budget) {
    return budget ? Budget::uniform(*budget) : Budget::from_environment();
}

std::vector<Share> load_shares(const std::vector<std::string>& texts) {
    std::vector<Share> out;
    for (const auto& t : texts) out.push_back(parse_share(t));
    if (out.empty()) throw ValidationError("at least one share is required");
    return out;
}

py::dict setup(std::size_t n, std::size_t t, const std::string& family, std::uint64_t seed, const std::string& builtin) {
    const auto fam = parse_platform_family(family);
    if (!fam) throw ValidationError("family must be coxeter or polycyclic-builtin");
    const auto scheme = setup_scheme(*fam, SchemeParams(n, t), seed, builtin);
    const auto shares = make_shares(scheme.presentation, build_access_structure(n, t), scheme.scheme_id);
    std::vector<std::string> share_texts;
    for (const auto& s : shares) share_texts.push_back(serialize_share(s));
    py::dict d;
    d["scheme"] = serialize_scheme(scheme);
    d["shares"] = share_texts;
    d["scheme_id"] = scheme.scheme_id.hex();
    d["m"] = scheme.params.m();
    d["k"] = scheme.presentation.generators.size();
    d["platform"] = scheme.platform;
    return d;
}

py::dict encode(const std::string& scheme_text, const std::string& bits, std::uint64_t seed, const std::string& signature,
                std::optional<std::string> recipient, double coverage_fraction, std::size_t commutator_count,
                std::size_t conjugator_length, std::size_t max_word_length, std::optional<std::uint64_t> budget) {
    const auto scheme = parse_scheme(scheme_text);
    EncodingConfig cfg;
    cfg.seed = seed;
    cfg.coverage_fraction = coverage_fraction;
    cfg.commutator_count = commutator_count;
    cfg.conjugator_length = conjugator_length;
    cfg.max_word_length = max_word_length;
    if (budget) cfg.decode_budget = Budget::uniform(*budget);

    auto payload = parse_bits(bits);
    if (payload.empty()) throw ValidationError("no bits to encode");
    if (!signature.empty()) {
        auto rng = derive_rng(seed, kSignatureStream);
        payload = embed_signature(payload, parse_bits(signature), rng, cfg.max_message_bits);
    }
    const auto rep = recipient ? encode_for_recipient(scheme, parse_share(*recipient), payload, cfg)
                               : encode_message(scheme, payload, cfg);
    py::dict d;
    d["message"] = serialize_message(rep.message, scheme.presentation.generators);
    d["bits"] = format_bits(payload);
    d["relators_covered"] = rep.relators_covered;
    d["warnings"] = rep.warnings;
    return d;
}

std::string decode(const std::vector<std::string>& share_texts, const std::string& message, bool single,
                   std::optional<std::uint64_t> budget) {
    const auto shares = load_shares(share_texts);
    const auto msg = parse_message(message, shares.front().generators);
    if (single) {
        if (shares.size() != 1) throw ValidationError("single-share decoding takes exactly one share");
        return decode_single(shares.front(), msg, budget_or_env(budget)).render();
    }
    return decode_message(shares, msg, budget_or_env(budget)).render();
}

py::dict word_problem(const std::string& presentation, const std::string& word, bool assert_consistent,
                      std::optional<std::uint64_t> budget) {
    const auto p = parse_presentation(presentation);
    p.validate(false);
    SolverOptions opts;
    opts.budget = budget_or_env(budget);
    opts.assume_consistent = assert_consistent;
    const auto d = make_solver(p, opts)->decide(parse_word(word, p.generators));
    py::dict out;
    out["verdict"] = std::string(to_string(d.verdict));
    out["work"] = d.stats.work;
    out["frontier"] = d.stats.peak_frontier;
    out["note"] = d.note;
    return out;
}

py::dict access_info(std::size_t n, std::size_t t) {
    const auto a = build_access_structure(n, t);
    const auto report = check_threshold_property(a);
    py::dict d;
    d["m"] = a.params.m();
    d["subsets"] = a.subsets;
    d["shares"] = a.share_indices;
    d["threshold_ok"] = report.passed() && report.unauthorized_miss_exactly_one;
    return d;
}

py::dict signature(const std::string& bits, const std::string& sig) {
    const auto r = verify_signature(parse_bits(bits), parse_bits(sig));
    py::dict d;
    d["authentic"] = r.authentic;
    d["offsets"] = r.offsets;
    return d;
}

py::dict attack(const std::vector<std::string>& share_texts, const std::string& message,
                std::optional<std::uint64_t> budget) {
    const auto shares = load_shares(share_texts);
    const auto r = coalition_attack(shares, parse_message(message, shares.front().generators), budget_or_env(budget));
    std::vector<std::string> verdicts;
    for (const auto& w : r.words) verdicts.emplace_back(to_string(w.verdict));
    py::dict d;
    d["complete"] = r.complete;
    d["missing"] = r.missing;
    d["verdicts"] = verdicts;
    d["report"] = format_report(r);
    return d;
}

py::list pool(const std::vector<std::string>& candidates, const std::string& message, const std::string& sig,
              std::optional<std::vector<std::string>> labels, std::optional<std::uint64_t> budget) {
    if (candidates.empty()) return py::list();
    std::vector<GroupPresentation> presentations;
    for (const auto& c : candidates)
        presentations.push_back(c.starts_with("WPSS-SCHEME") ? parse_scheme(c).presentation : parse_presentation(c));
    std::vector<std::string> names;
    if (labels) {
        if (labels->size() != candidates.size()) throw ValidationError("one label per candidate");
        names = *labels;
    } else {
        for (std::size_t i = 0; i < candidates.size(); ++i) names.push_back(std::to_string(i));
    }
    const auto widest = std::max_element(presentations.begin(), presentations.end(), [](const auto& a, const auto& b) {
        return a.generators.size() < b.generators.size();
    });
    const auto ranked =
        pool_attack(presentations, names, parse_message(message, widest->generators), parse_bits(sig), budget_or_env(budget));
    py::list out;
    for (const auto& c : ranked) {
        py::dict d;
        d["index"] = c.index;
        d["label"] = c.label;
        d["decoded"] = c.decoded;
        d["matched"] = c.matched;
        d["offsets"] = c.offsets;
        d["undecided"] = c.undecided;
        d["error"] = c.error;
        out.append(d);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_wpss, m) {
    m.doc() = "threshold secret sharing over group presentations";

    // Translators run newest first, so the base class goes in first.
    auto& base = py::register_exception<Error>(m, "Error");
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
    py::register_exception<ThresholdError>(m, "ThresholdError", base.ptr());
    py::register_exception<IntegrityError>(m, "IntegrityError", base.ptr());
    py::register_exception<BudgetError>(m, "BudgetError", base.ptr());

    m.def("setup", &setup, py::arg("n"), py::arg("t"), py::arg("family") = "coxeter", py::arg("seed") = 0,
          py::arg("builtin") = "");
    m.def("encode", &encode, py::arg("scheme"), py::arg("bits"), py::kw_only(), py::arg("seed") = 0,
          py::arg("signature") = "", py::arg("recipient") = py::none(), py::arg("coverage_fraction") = 0.8,
          py::arg("commutator_count") = 0, py::arg("conjugator_length") = 3, py::arg("max_word_length") = 4096,
          py::arg("budget") = py::none());
    m.def("decode", &decode, py::arg("shares"), py::arg("message"), py::kw_only(), py::arg("single") = false,
          py::arg("budget") = py::none());
    m.def("word_problem", &word_problem, py::arg("presentation"), py::arg("word"), py::kw_only(),
          py::arg("assert_consistent") = false, py::arg("budget") = py::none());
    m.def("access_structure", &access_info, py::arg("n"), py::arg("t"));
    m.def("verify_signature", &signature, py::arg("bits"), py::arg("signature"));
    m.def("coalition_attack", &attack, py::arg("shares"), py::arg("message"), py::kw_only(),
          py::arg("budget") = py::none());
    m.def("pool_attack", &pool, py::arg("candidates"), py::arg("message"), py::arg("signature"), py::kw_only(),
          py::arg("labels") = py::none(), py::arg("budget") = py::none());
}
