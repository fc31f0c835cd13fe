#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "levrecon/bounds.hpp"
#include "levrecon/codebook.hpp"
#include "levrecon/decoder.hpp"
#include "levrecon/error.hpp"
#include "levrecon/json_io.hpp"
#include "levrecon/oracle.hpp"
#include "levrecon/simulation.hpp"

namespace levrecon::cli {

namespace {

using nlohmann::json;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class Emitter {
public:
    Emitter(std::ostream& out, std::string format) : out_(out), format_(std::move(format)) {}

    const std::string& format() const { return format_; }
    std::ostream& stream() { return out_; }

    void emit(const json& doc, const json& plain) {
        if (format_ == "plain")
            out_ << (plain.is_string() ? plain.get<std::string>() : plain.dump()) << '\n';
        else
            out_ << doc.dump(2) << '\n';
    }

private:
    std::ostream& out_;
    std::string format_;
};

// ---------------------------------------------------------------- bounds

struct BoundsArgs {
    std::string formula;
    std::optional<std::int64_t> n, t, a, w1, b;
    std::optional<int> q;
    std::string mode = "exactly";
};

struct Formula {
    std::vector<std::string> params;
    std::function<json(const std::map<std::string, std::int64_t>&, CountMode)> eval;
};

const std::map<std::string, Formula>& formulas() {
    using P = std::map<std::string, std::int64_t>;
    static const std::map<std::string, Formula> table = {
        {"levenshtein-deletion",
         {{"n", "t"}, [](const P& p, CountMode) { return big_to_json(bounds::levenshtein_deletion_bound(p.at("n"), p.at("t"))); }}},
        {"levenshtein-insertion",
         {{"n", "q", "t"},
          [](const P& p, CountMode) {
              return big_to_json(bounds::levenshtein_insertion_bound(p.at("n"), static_cast<int>(p.at("q")), p.at("t")));
          }}},
        {"pattern",
         {{"n", "t", "mode"}, [](const P& p, CountMode m) { return big_to_json(bounds::pattern_bound(p.at("n"), p.at("t"), m)); }}},
        {"multiset-t1-threshold",
         {{"n"}, [](const P& p, CountMode) { return big_to_json(bounds::multiset_t1_threshold(p.at("n"))); }}},
        {"adjacent",
         {{"n", "t", "a"},
          [](const P& p, CountMode) {
              return big_to_json(bounds::adjacent_singleton_channels(p.at("n"), p.at("t"), p.at("a")));
          }}},
        {"adjacent-at-most",
         {{"n", "t", "a"},
          [](const P& p, CountMode) {
              return big_to_json(bounds::adjacent_singleton_channels_at_most(p.at("n"), p.at("t"), p.at("a")));
          }}},
        {"spread-pair",
         {{"n", "t"}, [](const P& p, CountMode) { return big_to_json(bounds::spread_pair_channels(p.at("n"), p.at("t"))); }}},
        {"half-pair",
         {{"n", "t"}, [](const P& p, CountMode) { return big_to_json(bounds::half_pair_channels(p.at("n"), p.at("t"))); }}},
        {"cumulative-half",
         {{"n", "t"}, [](const P& p, CountMode) { return big_to_json(bounds::cumulative_half_bound(p.at("n"), p.at("t"))); }}},
        {"weight-gap",
         {{"n", "w1", "b", "t"},
          [](const P& p, CountMode) {
              return big_to_json(bounds::weight_gap_confusable(p.at("n"), p.at("w1"), p.at("b"), p.at("t")));
          }}},
        {"binom-ratio",
         {{"n", "t"},
          [](const P& p, CountMode) {
              const Rational r = bounds::binom_ratio(p.at("n"), p.at("t"));
              return json(r.str());
          }}},
        {"binom-ratio-limit",
         {{"t"}, [](const P& p, CountMode) { return big_to_json(bounds::binom_ratio_limit(p.at("t"))); }}},
    };
    return table;
}

int run_bounds(const BoundsArgs& args, Emitter& emit) {
    const auto it = formulas().find(args.formula);
    if (it == formulas().end()) throw UsageError("unknown formula: " + args.formula);
    std::map<std::string, std::int64_t> values;
    const std::map<std::string, std::optional<std::int64_t>> given = {
        {"n", args.n}, {"t", args.t}, {"a", args.a}, {"w1", args.w1}, {"b", args.b},
        {"q", args.q ? std::optional<std::int64_t>(*args.q) : std::nullopt}};
    json params = json::object();
    CountMode mode = parse_count_mode(args.mode);
    for (const auto& name : it->second.params) {
        if (name == "mode") {
            params["mode"] = std::string(to_string(mode));
            continue;
        }
        const auto& v = given.at(name);
        if (!v) throw UsageError("formula " + args.formula + " needs --" + name);
        values[name] = *v;
        params[name] = *v;
    }
    json doc{{"formula", args.formula}, {"params", params}};
    try {
        doc["value"] = it->second.eval(values, mode);
        doc["hypothesis_ok"] = true;
    } catch (const DomainError& e) {
        doc["value"] = nullptr;
        doc["hypothesis_ok"] = false;
        doc["error"] = {{"kind", "domain"}, {"message", e.what()}};
        emit.emit(doc, doc["error"]["message"]);
        return kDomainError;
    }
    emit.emit(doc, doc["value"]);
    return kOk;
}

// ---------------------------------------------------------------- expect

struct ExpectArgs {
    std::optional<double> m;
    std::optional<std::int64_t> n, t;
    std::string mode = "at-most";
    std::optional<std::uint64_t> draws, j, reps;
    std::uint64_t seed = kDefaultSeed;
};

int run_expect(const ExpectArgs& args, Emitter& emit) {
    const CountMode mode = parse_count_mode(args.mode);
    double m = 0;
    json doc = json::object();
    if (args.m) {
        m = *args.m;
    } else if (args.n && args.t) {
        const BigInt space = mode == CountMode::AtMost ? hamming_ball_volume(2, *args.n, *args.t)
                                                       : binomial(*args.n, *args.t);
        m = to_double(space);
        doc["n"] = *args.n;
        doc["t"] = *args.t;
        doc["mode"] = std::string(to_string(mode));
    } else {
        throw UsageError("expect needs --m or both --n and --t");
    }
    if (!args.draws && !args.j) throw UsageError("expect needs --draws and/or --j");
    if (m < 1) throw DomainError("pattern space must be non-empty");
    doc["m"] = m;
    json plain;
    if (args.j) {
        const double v = bounds::pccp_expectation(*args.j, static_cast<std::uint64_t>(std::llround(m)));
        doc["j"] = *args.j;
        doc["pccp_expectation"] = v;
        plain = v;
    }
    if (args.draws) {
        const double v = bounds::expected_unique_patterns(m, *args.draws);
        doc["draws"] = *args.draws;
        doc["expected_unique"] = v;
        plain = v;
        if (args.reps) {
            if (!args.n || !args.t || mode != CountMode::AtMost)
                throw UsageError("--reps samples at-most-t deletion patterns and needs --n and --t");
            const PatternSampler sampler(static_cast<std::size_t>(*args.n), 2,
                                         ErrorBudgets{0, static_cast<int>(*args.t), 0});
            const Word x = Word::zeros(static_cast<std::size_t>(*args.n), Alphabet(2));
            double sum = 0, sum_sq = 0;
            for (std::uint64_t r = 0; r < *args.reps; ++r) {
                Rng rng = Rng::for_stream(args.seed, r);
                std::set<ErrorPattern> seen;
                for (std::uint64_t k = 0; k < *args.draws; ++k) seen.insert(sampler.sample(x, rng));
                const double u = static_cast<double>(seen.size());
                sum += u;
                sum_sq += u * u;
            }
            const double reps = static_cast<double>(*args.reps);
            const double mean = sum / reps;
            const double var = reps > 1 ? (sum_sq - reps * mean * mean) / (reps - 1) : 0.0;
            doc["empirical"] = {{"reps", *args.reps},
                                {"seed", args.seed},
                                {"mean", mean},
                                {"std_error", std::sqrt(std::max(var, 0.0) / reps)}};
        }
    }
    emit.emit(doc, plain);
    return kOk;
}

// ---------------------------------------------------------------- distinguish / extremal

struct DistinguishArgs {
    std::string x, xp;
    std::size_t t = 1;
    int q = 2;
    std::string mode = "exactly", model = "multiset", type = "deletion";
    bool witness = false;
};

int run_distinguish(const DistinguishArgs& args, Emitter& emit) {
    const Alphabet alphabet(args.q);
    const Word x = Word::parse(args.x, alphabet);
    const Word xp = Word::parse(args.xp, alphabet);
    const auto report = oracle::confusable_max(x, xp, args.t, parse_count_mode(args.mode),
                                               parse_channel_model(args.model), parse_error_type(args.type), args.witness);
    emit.emit(report_to_json(report), report.n_max_confusable);
    return kOk;
}

struct ExtremalArgs {
    std::size_t n = 6, t = 1;
    int q = 2;
    std::string mode = "exactly", model = "multiset";
    bool canonical = false;
    unsigned jobs = 1;
    double budget = 2e10;
    std::optional<std::size_t> max_pairs;
};

int run_extremal(const ExtremalArgs& args, Emitter& emit) {
    oracle::ExtremalOptions opts;
    opts.canonicalize = args.canonical;
    opts.jobs = args.jobs;
    opts.budget = args.budget;
    const CountMode mode = parse_count_mode(args.mode);
    const ChannelModel model = parse_channel_model(args.model);
    const auto result = oracle::extremal_search(args.n, args.q, args.t, mode, model, opts);
    json pairs = json::array();
    const std::size_t shown = std::min(result.pairs.size(), args.max_pairs.value_or(result.pairs.size()));
    for (std::size_t i = 0; i < shown; ++i)
        pairs.push_back({{"x", result.pairs[i].x.to_string()}, {"xp", result.pairs[i].xp.to_string()}});
    json doc{{"n", args.n},
             {"q", args.q},
             {"t", args.t},
             {"mode", std::string(to_string(mode))},
             {"model", std::string(to_string(model))},
             {"canonical", args.canonical},
             {"n_max_confusable", result.n_max},
             {"channels_to_distinguish", result.n_max + 1},
             {"pairs_total", result.pairs.size()},
             {"pairs", pairs},
             {"pairs_examined", result.pairs_examined}};
    emit.emit(doc, result.n_max);
    return kOk;
}

// ---------------------------------------------------------------- code

struct CodeArgs {
    int q = 4;
    std::int64_t n = 10;
    std::string p;
    std::optional<std::string> word;
    bool sample = false;
    std::uint64_t seed = kDefaultSeed;
};

int run_code(const CodeArgs& args, Emitter& emit) {
    const CodeParams params(args.q, args.n, args.p);
    json doc{{"q", args.q},
             {"n", args.n},
             {"p", params.p()},
             {"tau", params.threshold()},
             {"third_symbol_floor", params.third_symbol_floor()},
             {"excluded_count", big_to_json(excluded_count(params))},
             {"size_lower_bound", big_to_json(code_size_lower_bound(params))}};
    json plain = params.threshold();
    if (args.word) {
        const Word w = Word::parse(*args.word, Alphabet(args.q));
        const bool member = is_codeword(w, params);
        doc["word"] = w.to_string();
        doc["is_codeword"] = member;
        plain = member;
    }
    if (args.sample) {
        Rng rng(args.seed);
        const Word w = sample_codeword(params, rng);
        doc["sample"] = w.to_string();
        doc["seed"] = args.seed;
        plain = w.to_string();
    }
    emit.emit(doc, plain);
    return kOk;
}

// ---------------------------------------------------------------- decode

struct BudgetArgs {
    int ts = 0, td = 0, ti = 0;
    ErrorBudgets budgets() const { return ErrorBudgets{ts, td, ti}; }
};

struct DecodeArgs {
    int q = 4;
    std::size_t n = 0;
    BudgetArgs b;
    std::optional<std::string> input;
    std::optional<std::uint64_t> max_reads;
};

std::vector<Word> read_words(std::istream& in, Alphabet alphabet) {
    std::vector<Word> words;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        words.push_back(Word::parse(std::string_view(line).substr(first, last - first + 1), alphabet));
    }
    return words;
}

int run_decode(const DecodeArgs& args, std::istream& in, Emitter& emit) {
    if (args.n == 0) throw UsageError("decode needs --n");
    const Alphabet alphabet(args.q);
    std::vector<Word> words;
    if (args.input && *args.input != "-") {
        std::ifstream file(*args.input);
        if (!file) throw UsageError("cannot open input file: " + *args.input);
        words = read_words(file, alphabet);
    } else {
        words = read_words(in, alphabet);
    }
    DecoderConfig cfg{args.q, args.n, args.b.budgets(), args.max_reads};
    if (!cfg.max_reads) cfg.max_reads = default_read_cap(args.q, args.n, cfg.budgets);
    const DecodeResult r = decode_stream(words, cfg);
    json doc{{"result", r.word ? r.word->to_string() : std::string()},
             {"decoded", r.word.has_value()},
             {"reads_consumed", r.reads_consumed},
             {"certificate", r.certificate ? certificate_to_json(*r.certificate) : json(nullptr)}};
    emit.emit(doc, doc["result"]);
    return kOk;
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
    int q = 4;
    std::size_t n = 100;
    BudgetArgs b;
    std::uint64_t samples = 1000;
    std::uint64_t seed = kDefaultSeed;
    unsigned jobs = 1;
    std::optional<std::uint64_t> max_reads;
    std::optional<std::string> out;
    bool reference = false;
};

int run_simulate(const SimulateArgs& args, Emitter& emit, std::ostream& err) {
    std::vector<SimSpec> specs;
    if (args.reference) {
        specs = reference_table_specs(args.samples, args.seed, args.jobs);
        if (args.max_reads)
            for (auto& s : specs) s.max_reads = *args.max_reads;
    } else {
        SimSpec s;
        s.q = args.q;
        s.n = args.n;
        s.budgets = args.b.budgets();
        s.samples = args.samples;
        s.seed = args.seed;
        s.jobs = args.jobs;
        s.max_reads = args.max_reads.value_or(default_read_cap(args.q, args.n, s.budgets));
        specs.push_back(s);
    }
    for (const auto& s : specs)
        if (!halting_hypothesis_holds(s))
            err << "warning: n=" << s.n << " is below (q-1) p (t_d + t_s); halting is not guaranteed\n";
    const auto results = run_sweep(specs);
    if (args.out) {
        std::ofstream file(*args.out);
        if (!file) throw DomainError("cannot write " + *args.out);
        write_sweep_csv(file, results);
        if (!file) throw DomainError("failed writing " + *args.out);
    }
    if (emit.format() == "csv") {
        write_sweep_csv(emit.stream(), results);
        return kOk;
    }
    json docs = json::array();
    for (const auto& r : results) docs.push_back(sim_result_to_json(r));
    const json doc = results.size() == 1 ? docs.front() : json{{"results", docs}};
    json plain = results.size() == 1 ? json(results.front().average) : json(nullptr);
    if (results.size() != 1) {
        std::ostringstream csv;
        write_sweep_csv(csv, results);
        plain = csv.str();
    }
    emit.emit(doc, plain);
    return kOk;
}

void add_budget_options(CLI::App* cmd, BudgetArgs& b) {
    cmd->add_option("--ts", b.ts, "substitutions per channel (at most)")->check(CLI::NonNegativeNumber);
    cmd->add_option("--td", b.td, "deletions per channel (at most)")->check(CLI::NonNegativeNumber);
    cmd->add_option("--ti", b.ti, "insertions per channel (at most)")->check(CLI::NonNegativeNumber);
}

json error_doc(const char* kind, const std::string& message) {
    return json{{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sequence reconstruction bounds, oracles, decoder and simulator", "levrecon"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "plain", "csv"}))
        ->capture_default_str();

    BoundsArgs bargs;
    auto* bounds_cmd = app.add_subcommand("bounds", "evaluate a closed-form channel count");
    bounds_cmd->add_option("formula", bargs.formula, "formula name")
        ->required()
        ->check(CLI::IsMember([] {
            std::vector<std::string> names;
            for (const auto& [k, v] : formulas()) names.push_back(k);
            return names;
        }()));
    bounds_cmd->add_option("--n", bargs.n);
    bounds_cmd->add_option("--t", bargs.t);
    bounds_cmd->add_option("--q", bargs.q);
    bounds_cmd->add_option("--a", bargs.a);
    bounds_cmd->add_option("--w1", bargs.w1);
    bounds_cmd->add_option("--b", bargs.b);
    bounds_cmd->add_option("--mode", bargs.mode, "exactly | at-most")->capture_default_str();

    ExpectArgs eargs;
    auto* expect_cmd = app.add_subcommand("expect", "coupon-collector expectations for random channels");
    expect_cmd->add_option("--m", eargs.m, "pattern space size");
    expect_cmd->add_option("--n", eargs.n, "word length (deletion pattern space)");
    expect_cmd->add_option("--t", eargs.t, "deletion budget");
    expect_cmd->add_option("--mode", eargs.mode)->capture_default_str();
    expect_cmd->add_option("--draws", eargs.draws, "number of channels N");
    expect_cmd->add_option("--j", eargs.j, "distinct patterns wanted");
    expect_cmd->add_option("--reps", eargs.reps, "Monte Carlo repetitions of the distinct-pattern count");
    expect_cmd->add_option("--seed", eargs.seed)->envname("LEVRECON_SEED")->capture_default_str();

    DistinguishArgs dargs;
    auto* dist_cmd = app.add_subcommand("distinguish", "largest confusable channel count of a word pair");
    dist_cmd->add_option("--x", dargs.x)->required();
    dist_cmd->add_option("--xp", dargs.xp)->required();
    dist_cmd->add_option("--t", dargs.t)->required();
    dist_cmd->add_option("--q", dargs.q)->capture_default_str();
    dist_cmd->add_option("--mode", dargs.mode)->capture_default_str();
    dist_cmd->add_option("--model", dargs.model, "traditional | multiset | nonmultiset")->capture_default_str();
    dist_cmd->add_option("--type", dargs.type, "deletion | insertion")->capture_default_str();
    dist_cmd->add_flag("--witness", dargs.witness, "include confusing pattern sets");

    ExtremalArgs xargs;
    auto* ext_cmd = app.add_subcommand("extremal", "exhaustive search for the hardest word pairs");
    ext_cmd->add_option("--n", xargs.n)->required();
    ext_cmd->add_option("--t", xargs.t)->required();
    ext_cmd->add_option("--q", xargs.q)->capture_default_str();
    ext_cmd->add_option("--mode", xargs.mode)->capture_default_str();
    ext_cmd->add_option("--model", xargs.model)->capture_default_str();
    ext_cmd->add_flag("--canonical", xargs.canonical, "report pairs up to symbol relabelling");
    ext_cmd->add_option("--jobs", xargs.jobs)->envname("LEVRECON_JOBS")->check(CLI::PositiveNumber);
    ext_cmd->add_option("--budget", xargs.budget, "limit on q^(2n) * patterns")->capture_default_str();
    ext_cmd->add_option("--max-pairs", xargs.max_pairs, "print at most this many pairs");

    CodeArgs cargs;
    auto* code_cmd = app.add_subcommand("code", "restricted code parameters and membership");
    code_cmd->add_option("--q", cargs.q)->capture_default_str();
    code_cmd->add_option("--n", cargs.n)->required();
    code_cmd->add_option("--p", cargs.p, "override p (decimal), default 16/e");
    code_cmd->add_option("--word", cargs.word, "word to test");
    code_cmd->add_flag("--sample", cargs.sample, "draw a uniform codeword");
    code_cmd->add_option("--seed", cargs.seed)->envname("LEVRECON_SEED")->capture_default_str();

    DecodeArgs decargs;
    auto* dec_cmd = app.add_subcommand("decode", "decode newline-delimited channel outputs");
    dec_cmd->add_option("--q", decargs.q)->capture_default_str();
    dec_cmd->add_option("--n", decargs.n)->required();
    add_budget_options(dec_cmd, decargs.b);
    dec_cmd->add_option("--input", decargs.input, "file of outputs, default stdin");
    dec_cmd->add_option("--max-reads", decargs.max_reads)->check(CLI::PositiveNumber);

    SimulateArgs sargs;
    auto* sim_cmd = app.add_subcommand("simulate", "channels-until-decode Monte Carlo");
    sim_cmd->add_option("--q", sargs.q)->capture_default_str();
    sim_cmd->add_option("--n", sargs.n)->capture_default_str();
    add_budget_options(sim_cmd, sargs.b);
    sim_cmd->add_option("--samples", sargs.samples)->check(CLI::PositiveNumber)->capture_default_str();
    sim_cmd->add_option("--seed", sargs.seed)->envname("LEVRECON_SEED")->capture_default_str();
    sim_cmd->add_option("--jobs", sargs.jobs)->envname("LEVRECON_JOBS")->check(CLI::PositiveNumber);
    sim_cmd->add_option("--max-reads", sargs.max_reads)->check(CLI::PositiveNumber);
    sim_cmd->add_option("--out", sargs.out, "write CSV table here");
    sim_cmd->add_flag("--reference", sargs.reference, "run the twelve q = 4 reference points");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        out << error_doc("usage", e.what()).dump(2) << '\n';
        err << "usage error: " << e.what() << "\nrun with --help for usage\n";
        return kUsageError;
    }

    Emitter emit(out, format);
    try {
        if (*bounds_cmd) return run_bounds(bargs, emit);
        if (*expect_cmd) return run_expect(eargs, emit);
        if (*dist_cmd) return run_distinguish(dargs, emit);
        if (*ext_cmd) return run_extremal(xargs, emit);
        if (*code_cmd) return run_code(cargs, emit);
        if (*dec_cmd) return run_decode(decargs, in, emit);
        if (*sim_cmd) return run_simulate(sargs, emit, err);
    } catch (const UsageError& e) {
        out << error_doc("usage", e.what()).dump(2) << '\n';
        return kUsageError;
    } catch (const ParseError& e) {
        out << error_doc("usage", e.what()).dump(2) << '\n';
        return kUsageError;
    } catch (const BudgetExceeded& e) {
        out << error_doc("budget", e.what()).dump(2) << '\n';
        return kDomainError;
    } catch (const DomainError& e) {
        out << error_doc("domain", e.what()).dump(2) << '\n';
        return kDomainError;
    }
    return kUsageError;
}

}  // namespace levrecon::cli
