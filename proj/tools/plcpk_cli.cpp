#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "plcpk/plcpk.hpp"

namespace {

using nlohmann::json;
using namespace plcpk;

// ------------------------------------------------------------------ ingest

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::string data((std::istreambuf_iterator<char>(std::cin)),
                         std::istreambuf_iterator<char>());
        return data;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open input file: " + path);
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return data;
}

std::vector<NamedSequence> load_input(const std::string& path, const std::string& format) {
    std::string data = slurp(path);
    bool fasta = format == "fasta" ||
                 (format == "auto" && !data.empty() && data[0] == '>');
    std::istringstream in(data);
    if (fasta) return parse_fasta(in);
    return {{path == "-" ? "stdin" : path, read_raw(in)}};
}

std::vector<NamedSequence> load_inputs(const std::vector<std::string>& paths,
                                       const std::string& format) {
    std::vector<NamedSequence> all;
    for (const std::string& p : paths.empty() ? std::vector<std::string>{"-"} : paths) {
        std::vector<NamedSequence> part = load_input(p, format);
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

/// Encode all sequences over one shared alphabet (DNA auto-detected).
std::vector<Text> encode_all(const std::vector<NamedSequence>& seqs) {
    std::vector<std::string> raws;
    raws.reserve(seqs.size());
    for (const NamedSequence& s : seqs) raws.push_back(s.raw);
    Alphabet alphabet = detect_alphabet(raws);
    std::vector<Text> texts;
    texts.reserve(seqs.size());
    for (const std::string& r : raws) texts.push_back(encode_text(r, alphabet));
    return texts;
}

Model parse_model(const std::string& name) {
    if (name == "hamming") return Model::Hamming;
    if (name == "edit") return Model::Edit;
    throw input_error("unknown model: " + name + " (expected hamming or edit)");
}

std::string format_double(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

// ------------------------------------------------------------------ options

struct GlobalOpts {
    std::uint64_t seed = 1;
    unsigned threads = 1;
    bool force_k = false;
};

struct RunOpts {
    std::vector<std::string> inputs;
    std::string format = "auto";
    int k = 0;
    std::string model = "hamming";
    double alpha = 4.0;
    bool json_out = false;
};

void add_run_options(CLI::App* cmd, RunOpts& o, bool with_alpha = true) {
    cmd->add_option("input", o.inputs, "input file(s); '-' or omitted reads stdin");
    cmd->add_option("--format", o.format, "input format: auto, fasta or raw")
        ->check(CLI::IsMember({"auto", "fasta", "raw"}));
    cmd->add_option("-k,--errors", o.k, "error budget k")->required();
    cmd->add_option("--model", o.model, "distance model: hamming or edit")
        ->check(CLI::IsMember({"hamming", "edit"}));
    if (with_alpha) cmd->add_option("--alpha", o.alpha, "lambda scaling constant (> 1)");
    auto* j = cmd->add_flag("--json", o.json_out, "emit JSON with metadata");
    cmd->add_flag("--tsv", "emit TSV (default)")->excludes(j);
}

Text single_text(const RunOpts& o) {
    std::vector<NamedSequence> seqs = load_inputs(o.inputs, o.format);
    if (seqs.size() != 1)
        throw input_error("this command expects exactly 1 sequence, got " +
                          std::to_string(seqs.size()));
    return encode_all(seqs)[0];
}

json run_metadata(const RunOpts& o, std::size_t n, bool oracle) {
    json meta;
    meta["model"] = o.model;
    meta["k"] = o.k;
    meta["n"] = n;
    meta["oracle"] = oracle;
    if (!oracle) {
        meta["alpha"] = o.alpha;
        meta["lambda"] = Config::lambda_for(n, o.alpha);
    }
    return meta;
}

// ----------------------------------------------------------------- commands

void emit_plcp(const PlcpResult& res, const RunOpts& o, bool oracle) {
    if (o.json_out) {
        json out = run_metadata(o, res.size(), oracle);
        out["command"] = "plcp";
        out["plcp"] = res.plcp;
        out["p"] = res.p;
        std::cout << out.dump(2) << "\n";
        return;
    }
    std::cout << "i\tplcp\tp\n";
    for (std::size_t i = 0; i < res.size(); ++i)
        std::cout << i << '\t' << res.plcp[i] << '\t' << res.p[i] << '\n';
}

PlcpResult compute_plcp(const Text& text, const RunOpts& o, const GlobalOpts& g, bool oracle) {
    Model model = parse_model(o.model);
    if (oracle)
        return model == Model::Hamming ? oracle::brute_plcp_hamming(text, o.k)
                                       : oracle::brute_plcp_edit(text, o.k);
    Config cfg = Config::make(text.size(), o.k, o.alpha, g.force_k);
    return model == Model::Hamming ? compute_plcp_hamming(text, cfg, g.threads)
                                   : compute_plcp_edit(text, cfg, g.threads);
}

int cmd_plcp(const RunOpts& o, const GlobalOpts& g, bool oracle) {
    Text text = single_text(o);
    emit_plcp(compute_plcp(text, o, g, oracle), o, oracle);
    return 0;
}

int cmd_mappability(const RunOpts& o, const GlobalOpts& g, const std::vector<std::size_t>& mus,
                    bool oracle) {
    Text text = single_text(o);
    MappabilityIndex midx = build_mappability(compute_plcp(text, o, g, oracle));
    if (o.json_out) {
        json out = run_metadata(o, text.size(), oracle);
        out["command"] = "mappability";
        json rows = json::array();
        for (std::size_t mu : mus) {
            std::int64_t m = query_mappability(midx, mu);
            rows.push_back({{"mu", mu}, {"m", m == 0 ? json(nullptr) : json(m)}});
        }
        out["queries"] = rows;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "mu\tm\n";
    for (std::size_t mu : mus) {
        std::int64_t m = query_mappability(midx, mu);
        std::cout << mu << '\t';
        if (m == 0)
            std::cout << "NA\n";
        else
            std::cout << m << '\n';
    }
    return 0;
}

int cmd_acs(const RunOpts& o, const GlobalOpts& g, bool oracle) {
    std::vector<NamedSequence> seqs = load_inputs(o.inputs, o.format);
    if (seqs.size() != 2)
        throw input_error("acs expects exactly 2 sequences, got " +
                          std::to_string(seqs.size()));
    std::vector<Text> texts = encode_all(seqs);
    Model model = parse_model(o.model);

    LambdaArrays la;
    if (oracle) {
        la.k = o.k;
        la.model = model;
        la.lambda_xy = oracle::brute_lambda(texts[0], texts[1], o.k, model);
        la.lambda_yx = oracle::brute_lambda(texts[1], texts[0], o.k, model);
    } else {
        la = compute_lambda(texts[0], texts[1], o.k, model, o.alpha, g.force_k, g.threads);
    }
    double dist = dist_k(la, texts[0].size(), texts[1].size());

    // LCS with k errors: the maximal Lambda value and its witness position
    std::size_t arg_max = 0;
    for (std::size_t i = 1; i < la.lambda_xy.size(); ++i)
        if (la.lambda_xy[i] > la.lambda_xy[arg_max]) arg_max = i;
    std::int64_t max_lambda = la.lambda_xy.empty() ? 0 : la.lambda_xy[arg_max];

    if (o.json_out) {
        json out = run_metadata(o, texts[0].size() + texts[1].size(), oracle);
        out["command"] = "acs";
        out["x"] = seqs[0].name;
        out["y"] = seqs[1].name;
        out["lambda_xy"] = la.lambda_xy;
        out["lambda_yx"] = la.lambda_yx;
        out["dist"] = dist;
        out["formula"] = dist_formula_id;
        out["max_lambda"] = max_lambda;
        out["max_lambda_witness"] = arg_max;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "array\ti\tlambda\n";
    for (std::size_t i = 0; i < la.lambda_xy.size(); ++i)
        std::cout << "xy\t" << i << '\t' << la.lambda_xy[i] << '\n';
    for (std::size_t i = 0; i < la.lambda_yx.size(); ++i)
        std::cout << "yx\t" << i << '\t' << la.lambda_yx[i] << '\n';
    std::cout << "# dist\t" << format_double(dist, 12) << '\n';
    std::cout << "# formula\t" << dist_formula_id << '\n';
    std::cout << "# max_lambda\t" << max_lambda << '\t' << arg_max << '\n';
    return 0;
}

int cmd_overlaps(const RunOpts& o, const GlobalOpts& g, bool oracle) {
    std::vector<NamedSequence> seqs = load_inputs(o.inputs, o.format);
    std::vector<Text> texts = encode_all(seqs);
    Model model = parse_model(o.model);

    OverlapResult res;
    if (oracle) {
        if (texts.size() < 2) throw input_error("overlaps need at least 2 strings");
        res.k = o.k;
        res.model = model;
        res.len.assign(texts.size(), std::vector<std::int64_t>(texts.size(), 0));
        for (std::size_t s = 0; s < texts.size(); ++s)
            for (std::size_t t = 0; t < texts.size(); ++t)
                res.len[s][t] = s == t ? static_cast<std::int64_t>(texts[s].size())
                                       : static_cast<std::int64_t>(oracle::brute_overlap(
                                             texts[s], texts[t], o.k, model));
    } else {
        res = all_pairs_overlaps(texts, o.k, model, o.alpha, g.force_k, g.threads);
    }

    if (o.json_out) {
        std::size_t total = 0;
        for (const Text& t : texts) total += t.size();
        json out = run_metadata(o, total, oracle);
        out["command"] = "overlaps";
        json names = json::array();
        for (const NamedSequence& s : seqs) names.push_back(s.name);
        out["strings"] = names;
        out["len"] = res.len;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "s\tt\tlen\n";
    for (std::size_t s = 0; s < texts.size(); ++s)
        for (std::size_t t = 0; t < texts.size(); ++t)
            if (s != t)
                std::cout << seqs[s].name << '\t' << seqs[t].name << '\t' << res.len[s][t]
                          << '\n';
    return 0;
}

// ------------------------------------------------------------------ verify

bool hamming_witness_ok(const Text& text, const PlcpResult& res, std::size_t i, int k) {
    std::int64_t p = res.p[i];
    std::size_t len = static_cast<std::size_t>(res.plcp[i]);
    if (p == no_witness) return len == 0;
    std::size_t j = static_cast<std::size_t>(p);
    if (j == i || i + len > text.size() || j + len > text.size()) return false;
    int errors = 0;
    for (std::size_t t = 0; t < len; ++t) errors += text.codes[i + t] != text.codes[j + t];
    return errors <= k;
}

bool edit_witness_ok(const Text& text, const PlcpResult& res, std::size_t i, int k) {
    std::int64_t p = res.p[i];
    std::size_t len = static_cast<std::size_t>(res.plcp[i]);
    if (p == no_witness) return len == 0;
    std::size_t j = static_cast<std::size_t>(p);
    std::int64_t diff = static_cast<std::int64_t>(j) - static_cast<std::int64_t>(i);
    if (std::llabs(diff) <= k || i + len > text.size()) return false;
    std::span<const code_t> codes(text.codes);
    return oracle::edit_lcp_banded(codes.subspan(i, len), codes.subspan(j), k) == len;
}

int cmd_verify(const GlobalOpts& g, int k, std::size_t n, unsigned trials, unsigned sigma,
               const std::string& model) {
    std::size_t lo = static_cast<std::size_t>(k) + 2;
    if (n < lo) throw input_error("-n too small for this k");
    std::vector<Model> models;
    if (model == "hamming" || model == "both") models.push_back(Model::Hamming);
    if (model == "edit" || model == "both") models.push_back(Model::Edit);
    if (models.empty()) throw input_error("unknown model: " + model);

    for (Model m : models) {
        for (unsigned trial = 0; trial < trials; ++trial) {
            Rng rng(derive_seed(g.seed, m == Model::Hamming ? 1 : 2, trial));
            std::size_t len = lo + rng.below(n - lo + 1);
            Text text = random_text(len, sigma, rng.next());
            Config cfg = Config::make(len, k, 4.0, true);
            PlcpResult fast = m == Model::Hamming ? compute_plcp_hamming(text, cfg, g.threads)
                                                  : compute_plcp_edit(text, cfg, g.threads);
            PlcpResult brute = m == Model::Hamming ? oracle::brute_plcp_hamming(text, k)
                                                   : oracle::brute_plcp_edit(text, k);
            for (std::size_t i = 0; i < len; ++i) {
                bool witness_ok = m == Model::Hamming ? hamming_witness_ok(text, fast, i, k)
                                                      : edit_witness_ok(text, fast, i, k);
                if (fast.plcp[i] != brute.plcp[i] || !witness_ok ||
                    (fast.p[i] == no_witness) != (brute.p[i] == no_witness)) {
                    std::cerr << "verify FAILED: model=" << model_name(m)
                              << " trial=" << trial << " n=" << len << " i=" << i
                              << " fast=" << fast.plcp[i] << " (p=" << fast.p[i] << ")"
                              << " oracle=" << brute.plcp[i] << " (p=" << brute.p[i] << ")"
                              << " text=" << text.decoded() << "\n";
                    return 3;
                }
            }
        }
        std::cout << "ok\t" << model_name(m) << "\ttrials=" << trials << "\tk=" << k
                  << "\tmax_n=" << n << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-error longest common prefix toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--seed", g.seed, "global random seed");
    app.add_option("--threads", g.threads, "data-parallel width (1 = sequential)");
    app.add_flag("--force-k", g.force_k, "bypass the k <= log n / log log n guard");

    RunOpts plcp_o, map_o, acs_o, ovl_o;
    RunOpts oplcp_o, omap_o, oacs_o, oovl_o;
    std::vector<std::size_t> map_mus, omap_mus;

    CLI::App* plcp = app.add_subcommand("plcp", "per-position k-error longest common prefix");
    add_run_options(plcp, plcp_o);

    CLI::App* map = app.add_subcommand("mappability", "minimal window length queries");
    add_run_options(map, map_o);
    map->add_option("--mu", map_mus, "query thresholds (repeat or comma-separate)")
        ->required()
        ->allow_extra_args(false)
        ->delimiter(',');

    CLI::App* acs = app.add_subcommand("acs", "Lambda arrays and Dist_k for two sequences");
    add_run_options(acs, acs_o);

    CLI::App* ovl = app.add_subcommand("overlaps", "all-pairs suffix/prefix overlaps");
    add_run_options(ovl, ovl_o);

    CLI::App* orc = app.add_subcommand("oracle", "brute-force reference implementations");
    orc->require_subcommand(1);
    orc->fallthrough();
    CLI::App* oplcp = orc->add_subcommand("plcp", "brute-force plcp");
    add_run_options(oplcp, oplcp_o, false);
    CLI::App* omap = orc->add_subcommand("mappability", "brute-force mappability");
    add_run_options(omap, omap_o, false);
    omap->add_option("--mu", omap_mus, "query thresholds (repeat or comma-separate)")
        ->required()
        ->allow_extra_args(false)
        ->delimiter(',');
    CLI::App* oacs = orc->add_subcommand("acs", "brute-force acs");
    add_run_options(oacs, oacs_o, false);
    CLI::App* oovl = orc->add_subcommand("overlaps", "brute-force overlaps");
    add_run_options(oovl, oovl_o, false);

    int ver_k = 1;
    std::size_t ver_n = 64;
    unsigned ver_trials = 20, ver_sigma = 4;
    std::string ver_model = "both";
    CLI::App* ver = app.add_subcommand("verify", "fast-vs-oracle equivalence on random inputs");
    ver->add_option("-k,--errors", ver_k, "error budget k")->required();
    ver->add_option("-n,--max-n", ver_n, "maximal text length");
    ver->add_option("--trials", ver_trials, "number of random trials");
    ver->add_option("--sigma", ver_sigma, "alphabet size");
    ver->add_option("--model", ver_model, "hamming, edit or both")
        ->check(CLI::IsMember({"hamming", "edit", "both"}));

    unsigned exp_sigma = 4, exp_trials = 10;
    int exp_k = 1;
    double exp_alpha = 4.0;
    std::vector<std::size_t> exp_sizes = {1024, 4096, 16384};
    CLI::App* exp = app.add_subcommand("experiment", "expected-length statistics (TSV)");
    exp->add_option("--sigma", exp_sigma, "alphabet size");
    exp->add_option("-k,--errors", exp_k, "error budget k");
    exp->add_option("--sizes", exp_sizes, "text lengths (repeat or comma-separate)")
        ->allow_extra_args(false)
        ->delimiter(',');
    exp->add_option("--trials", exp_trials, "trials per length");
    exp->add_option("--alpha", exp_alpha, "lambda scaling constant");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (plcp->parsed()) return cmd_plcp(plcp_o, g, false);
        if (map->parsed()) return cmd_mappability(map_o, g, map_mus, false);
        if (acs->parsed()) return cmd_acs(acs_o, g, false);
        if (ovl->parsed()) return cmd_overlaps(ovl_o, g, false);
        if (orc->parsed()) {
            if (oplcp->parsed()) return cmd_plcp(oplcp_o, g, true);
            if (omap->parsed()) return cmd_mappability(omap_o, g, omap_mus, true);
            if (oacs->parsed()) return cmd_acs(oacs_o, g, true);
            if (oovl->parsed()) return cmd_overlaps(oovl_o, g, true);
        }
        if (ver->parsed())
            return cmd_verify(g, ver_k, ver_n, ver_trials, ver_sigma, ver_model);
        if (exp->parsed()) {
            ExperimentReport report = experiment_expected_length(
                exp_sigma, exp_k, exp_sizes, exp_trials, g.seed, exp_alpha, g.threads);
            if (report.statistically_weak)
                std::cerr << "warning: fewer than 10 trials per size; "
                             "the report is statistically weak\n";
            write_experiment_tsv(std::cout, report);
            return 0;
        }
        return 1;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
