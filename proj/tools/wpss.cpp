// wpss: command-line front end for setup, encode, decode, word problems and
// attack simulations. Files carry shares and messages; stdout carries
// summaries and decoded bits.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "wpss/analysis.hpp"
#include "wpss/combiner.hpp"
#include "wpss/dealer.hpp"
#include "wpss/error.hpp"

namespace fs = std::filesystem;
using namespace wpss;

namespace {

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kIntegrity = 3, kBudget = 4 };

class UsageError : public Error {
public:
    using Error::Error;
};

struct Options {
    // setup
    std::size_t n = 0;
    std::size_t t = 0;
    std::string family = "coxeter";
    std::string builtin;
    std::string out;
    std::uint64_t seed = 0;
    // encode
    std::string scheme;
    std::string bits;
    std::string bits_file;
    std::string signature;
    std::string recipient;
    EncodingConfig cfg;
    // decode / attack
    std::vector<std::string> shares;
    std::string message;
    bool single = false;
    std::string pool;
    std::optional<std::uint64_t> budget;
    // wp
    std::string presentation;
    std::string word;
    bool assert_consistent = false;
};

Budget budget_of(const Options& o) { return o.budget ? Budget::uniform(*o.budget) : Budget::from_environment(); }

std::vector<Share> load_shares(const std::vector<std::string>& paths) {
    std::vector<Share> out;
    for (const auto& p : paths) {
        try {
            out.push_back(parse_share(read_file(p)));
        } catch (const ParseError& e) {
            throw ParseError(p + ": " + e.what(), e.position());
        }
    }
    return out;
}

Bits bits_arg(const std::string& text, const char* what) {
    try {
        return parse_bits(text);
    } catch (const ParseError& e) {
        throw ParseError(std::string(what) + ": " + e.what(), e.position());
    }
}

std::string trim_line(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    return s;
}

int cmd_setup(const Options& o) {
    const auto family = parse_platform_family(o.family);
    if (!family) throw UsageError("--family must be coxeter or polycyclic-builtin");
    const SchemeParams params(o.n, o.t);
    const auto access = build_access_structure(o.n, o.t);
    const auto scheme = setup_scheme(*family, params, o.seed, o.builtin);
    const auto shares = make_shares(scheme.presentation, access, scheme.scheme_id);
    const auto report = check_threshold_property(access);

    std::error_code ec;
    fs::create_directories(o.out, ec);
    if (ec) throw Error("cannot create output directory '" + o.out + "': " + ec.message());
    write_file((fs::path(o.out) / "scheme.wpss").string(), serialize_scheme(scheme));
    for (const auto& s : shares)
        write_file((fs::path(o.out) / ("share-" + std::to_string(s.participant) + ".wpss")).string(),
                   serialize_share(s));

    std::cout << "scheme-id: " << scheme.scheme_id.hex() << "\n"
              << "n: " << params.n() << " t: " << params.t() << " m: " << params.m() << "\n"
              << "k: " << scheme.presentation.generators.size() << "\n"
              << "platform: " << scheme.platform << "\n"
              << "threshold-check: " << (report.passed() ? "pass" : "FAIL") << " (" << report.coalitions_checked
              << " coalitions)\n"
              << "wrote: " << (fs::path(o.out) / "scheme.wpss").string() << " + " << shares.size() << " share files\n";
    for (const auto& f : report.failures) std::cerr << "threshold failure: " << f << "\n";
    return report.passed() ? kOk : kIntegrity;
}

int cmd_encode(const Options& o) {
    const auto scheme = parse_scheme(read_file(o.scheme));
    if (o.bits.empty() == o.bits_file.empty()) throw UsageError("give exactly one of --bits or --bits-file");
    const auto payload = bits_arg(o.bits.empty() ? trim_line(read_file(o.bits_file)) : o.bits, "bits");
    if (payload.empty()) throw UsageError("no bits to encode");
    auto cfg = o.cfg;
    cfg.seed = o.seed;
    if (o.budget || std::getenv("WPSS_BUDGET")) cfg.decode_budget = budget_of(o);

    Bits bits = payload;
    if (!o.signature.empty()) {
        auto rng = derive_rng(o.seed, kSignatureStream);
        bits = embed_signature(payload, bits_arg(o.signature, "signature"), rng, cfg.max_message_bits);
    }

    EncodeReport rep;
    if (o.recipient.empty()) {
        rep = encode_message(scheme, bits, cfg);
    } else {
        rep = encode_for_recipient(scheme, parse_share(read_file(o.recipient)), bits, cfg);
    }
    write_file(o.out, serialize_message(rep.message, scheme.presentation.generators));

    std::size_t longest = 0;
    std::size_t total = 0;
    for (const auto& w : rep.message.words) {
        longest = std::max(longest, w.size());
        total += w.size();
    }
    std::cout << "words: " << rep.message.words.size() << "\n"
              << "relators-covered: " << rep.relators_covered << "/" << scheme.params.m() << "\n"
              << "word-length: mean " << (total / rep.message.words.size()) << " max " << longest << "\n"
              << "wrote: " << o.out << "\n";
    for (const auto& w : rep.warnings) std::cerr << "warning: " << w << "\n";
    return kOk;
}

int cmd_decode(const Options& o) {
    const auto shares = load_shares(o.shares);
    if (shares.empty()) throw UsageError("at least one --share is required");
    const auto msg = parse_message(read_file(o.message), shares.front().generators);
    if (o.single) {
        if (shares.size() != 1) throw UsageError("--single takes exactly one --share");
        const auto r = decode_single(shares.front(), msg, budget_of(o));
        std::cout << r.render() << "\n";
        if (r.undecided()) std::cerr << r.undecided() << " word(s) undecided with this share alone\n";
        return kOk;
    }
    const auto r = decode_message(shares, msg, budget_of(o));
    std::cout << format_bits(r.bits) << "\n";
    return kOk;
}

int cmd_wp(const Options& o) {
    const auto p = parse_presentation(read_file(o.presentation));
    p.validate(false);
    SolverOptions opts;
    opts.budget = budget_of(o);
    opts.assume_consistent = o.assert_consistent;
    const auto solver = make_solver(p, opts);
    Word w;
    try {
        w = parse_word(o.word, p.generators);
    } catch (const ParseError& e) {
        throw ParseError(std::string("--word: ") + e.what(), e.position());
    }
    const auto d = solver->decide(w);
    std::cout << to_string(d.verdict) << " work=" << d.stats.work << " frontier=" << d.stats.peak_frontier << "\n";
    if (!d.note.empty()) std::cerr << d.note << "\n";
    return d.verdict == Verdict::undecided ? kBudget : kOk;
}

std::vector<fs::path> pool_files(const std::string& dir) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    return files;
}

int cmd_attack(const Options& o) {
    if (o.shares.empty() == o.pool.empty()) throw UsageError("give --share (repeatable) or --pool, not both or neither");
    const auto signature = bits_arg(o.signature, "signature");
    const auto text = read_file(o.message);

    if (!o.shares.empty()) {
        const auto shares = load_shares(o.shares);
        const auto msg = parse_message(text, shares.front().generators);
        const auto r = coalition_attack(shares, msg, budget_of(o));
        std::cout << format_report(r);
        if (!signature.empty()) {
            // Only proved identities can be trusted as 1s.
            Bits known;
            for (const auto& w : r.words) known.push_back(w.verdict == AttackVerdict::proved_identity);
            const auto s = verify_signature(known, signature);
            std::cout << "signature-in-proved-bits: " << (s.authentic ? "found" : "not found") << "\n";
        }
        return kOk;
    }

    std::vector<GroupPresentation> pool;
    std::vector<std::string> labels;
    for (const auto& f : pool_files(o.pool)) {
        const auto body = read_file(f.string());
        try {
            pool.push_back(body.starts_with("WPSS-SCHEME") ? parse_scheme(body).presentation : parse_presentation(body));
            labels.push_back(f.filename().string());
        } catch (const Error& e) {
            std::cerr << "skipping " << f.string() << ": " << e.what() << "\n";
        }
    }
    if (pool.empty()) {
        std::cout << format_report(std::vector<PoolCandidate>{});
        return kOk;
    }
    const auto widest = std::max_element(pool.begin(), pool.end(), [](const auto& a, const auto& b) {
        return a.generators.size() < b.generators.size();
    });
    const auto msg = parse_message(text, widest->generators);
    std::cout << format_report(pool_attack(pool, labels, msg, signature, budget_of(o)));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wpss: threshold secret sharing over group presentations"};
    app.require_subcommand(1);
    Options o;

    auto* setup = app.add_subcommand("setup", "deal a new scheme: master scheme file plus n share files");
    setup->add_option("--n", o.n, "number of participants")->required();
    setup->add_option("--t", o.t, "threshold")->required();
    setup->add_option("--family", o.family, "coxeter | polycyclic-builtin");
    setup->add_option("--builtin", o.builtin, "polycyclic builtin: dihedral | heisenberg | abelian");
    setup->add_option("--seed", o.seed, "RNG seed")->required();
    setup->add_option("--out", o.out, "output directory")->required();

    auto* encode = app.add_subcommand("encode", "encode bits as words");
    encode->add_option("--scheme", o.scheme, "master scheme file")->required();
    encode->add_option("--bits", o.bits, "bits as a string of 0/1");
    encode->add_option("--bits-file", o.bits_file, "file holding the bits");
    encode->add_option("--signature", o.signature, "signature bits embedded at a hidden offset");
    encode->add_option("--recipient", o.recipient, "share file of the single intended recipient");
    encode->add_option("--coverage", o.cfg.coverage_fraction, "fraction of relators per identity word");
    encode->add_option("--commutators", o.cfg.commutator_count, "commutator factors per word (0: max(m, 8))");
    encode->add_option("--conjugator-length", o.cfg.conjugator_length, "length of random conjugators");
    encode->add_option("--max-word-length", o.cfg.max_word_length, "cap on emitted word length");
    encode->add_option("--max-message-bits", o.cfg.max_message_bits, "cap on payload plus signature");
    encode->add_option("--budget", o.budget, "engine budget the words must decode within");
    encode->add_option("--seed", o.seed, "RNG seed")->required();
    encode->add_option("--out", o.out, "message file to write")->required();

    auto* decode = app.add_subcommand("decode", "decode a message with t or more shares");
    decode->add_option("--share", o.shares, "share file (repeatable)")->required();
    decode->add_option("--message", o.message, "message file")->required();
    decode->add_flag("--single", o.single, "decide in <gens | R_j> with one share (targeted messages)");
    decode->add_option("--budget", o.budget, "engine budget");

    auto* wp = app.add_subcommand("wp", "decide one word problem");
    wp->add_option("--presentation", o.presentation, "presentation file")->required();
    wp->add_option("--word", o.word, "word")->required();
    wp->add_flag("--assert-consistent", o.assert_consistent, "trust a polycyclic presentation to be consistent");
    wp->add_option("--budget", o.budget, "engine budget");

    auto* attack = app.add_subcommand("attack", "simulate sub-threshold or pool-search adversaries");
    attack->add_option("--share", o.shares, "share file held by the coalition (repeatable)");
    attack->add_option("--pool", o.pool, "directory of candidate presentation or scheme files");
    attack->add_option("--message", o.message, "message file")->required();
    attack->add_option("--signature", o.signature, "known signature bits");
    attack->add_option("--budget", o.budget, "engine budget per word");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*setup) return cmd_setup(o);
        if (*encode) return cmd_encode(o);
        if (*decode) return cmd_decode(o);
        if (*wp) return cmd_wp(o);
        if (*attack) return cmd_attack(o);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const ValidationError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kUsage;
    } catch (const ThresholdError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIntegrity;
    } catch (const IntegrityError& e) {
        std::cerr << "integrity failure: " << e.what() << "\n";
        return kIntegrity;
    } catch (const BudgetError& e) {
        std::cerr << "engine budget exhausted: " << e.what() << "\n";
        return kBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kFailure;
}
