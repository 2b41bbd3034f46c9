// Command line surface for the edist library: exact distances, the tree
// distance, sampling, estimation, hard-instance generation, the similarity
// lab, and a benchmark harness.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "edist/estimate.hpp"
#include "edist/exact.hpp"
#include "edist/hard.hpp"
#include "edist/instances.hpp"
#include "edist/io.hpp"
#include "edist/similarity.hpp"
#include "edist/tree_distance.hpp"

using namespace edist;

namespace {

struct CodecOpt {
    std::string name = "raw";
    Codec get() const { return parse_codec(name); }
};

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

ExplicitDist read_distribution(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open distribution file: " + path);
    ExplicitDist d;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        double p;
        std::string s;
        ss >> p >> s;
        if (!ss) throw std::runtime_error("bad distribution line: " + line);
        d.support.emplace_back(text_from_string(s), p);
    }
    d.validate();
    return d;
}

struct BenchCell {
    std::size_t index;
    std::string family;
    std::int64_t n;
    int b;
    double beta;
    int trial;
    std::uint64_t seed;
};

int run_bench(const std::vector<std::int64_t>& sizes, int b,
              const std::vector<double>& betas, int trials,
              std::uint64_t seed, const std::string& family_name_str,
              Symbol sigma, double c_p, const std::string& out_path,
              unsigned jobs) {
    const InstanceFamily family = parse_family(family_name_str);
    for (std::int64_t n : sizes) {
        std::int64_t p = 1;
        while (p < n) p *= b;
        (void)p;  // padding always makes n compatible with b
    }

    std::vector<BenchCell> cells;
    for (std::int64_t n : sizes)
        for (double beta : betas)
            for (int t = 0; t < trials; ++t)
                cells.push_back({cells.size(), family_name_str, n, b, beta, t,
                                 derive_seed(seed, stream::kBench,
                                             static_cast<std::uint64_t>(n),
                                             static_cast<std::uint64_t>(beta),
                                             static_cast<std::uint64_t>(t))});

    std::vector<std::string> rows(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            const BenchCell& c = cells[i];
            auto [x, y] = make_instance(family, c.n, sigma, c.seed);
            PaddedPair pp = pad_pair(x, y, c.b);
            TreeParams params =
                make_tree_params(pp.n, c.b, c.beta, c.seed, c_p);
            SampleTree tree = build_sample_tree(params);
            EstimateReport rep = estimate_tree_distance(pp.x, pp.y, tree);
            std::ostringstream row;
            row << c.family << '\t' << c.n << '\t' << c.b << '\t' << c.beta
                << '\t' << c.trial << '\t' << c.seed << '\t' << rep.estimate
                << '\t';
            if (pp.n <= 4096) {
                const std::int64_t exact = exact_tree_distance(pp.x, pp.y, params);
                row << exact << '\t';
                if (exact > 0)
                    row << rep.estimate / static_cast<double>(exact);
                else
                    row << (rep.estimate == 0 ? 1.0 : -1.0);
            } else {
                row << "-\t-";
            }
            row << '\t' << rep.queries_used << '\t' << rep.millis;
            rows[i] = row.str();
        }
    };
    std::vector<std::thread> pool;
    const unsigned nthreads = std::max(1u, jobs);
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open report: " + out_path);
    out << "#edist-approx v1\n";
    out << "#family\tn\tb\tbeta\ttrial\tseed\testimate\texact\tratio\tqueries\tmillis\n";
    for (const auto& r : rows) out << r << '\n';

    // per-(n, beta) median ratio summary
    for (std::int64_t n : sizes)
        for (double beta : betas) {
            std::vector<double> ratios;
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (cells[i].n != n || cells[i].beta != beta) continue;
                std::istringstream ss(rows[i]);
                std::string tok;
                for (int f = 0; f < 9; ++f) std::getline(ss, tok, '\t');
                if (tok != "-" && tok != "-1") {
                    try {
                        ratios.push_back(std::stod(tok));
                    } catch (...) {
                    }
                }
            }
            if (ratios.empty()) continue;
            std::sort(ratios.begin(), ratios.end());
            out << "# median-ratio n=" << n << " beta=" << beta << " "
                << ratios[ratios.size() / 2] << "\n";
        }
    std::cout << "wrote " << out_path << " (" << rows.size() << " rows)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"string distance toolkit: exact oracles, tree distance, "
                 "sampled estimation, hard instances, similarity lab"};
    app.require_subcommand(1);

    // ---- exact ----
    std::string fx, fy, metric = "ed";
    CodecOpt codec;
    auto* cmd_exact = app.add_subcommand("exact", "exact ed/edd/lcs of two files");
    cmd_exact->add_option("file_x", fx)->required();
    cmd_exact->add_option("file_y", fy)->required();
    cmd_exact->add_option("--metric", metric)->check(CLI::IsMember({"ed", "edd", "lcs"}));
    cmd_exact->add_option("--codec", codec.name)->check(CLI::IsMember({"raw", "hex16"}));

    // ---- edist ----
    int b = 16;
    auto* cmd_edist = app.add_subcommand("edist", "exact tree distance (padded)");
    cmd_edist->add_option("file_x", fx)->required();
    cmd_edist->add_option("file_y", fy)->required();
    cmd_edist->add_option("--b", b, "tree arity")->check(CLI::Range(2, 1 << 20));
    cmd_edist->add_option("--codec", codec.name)->check(CLI::IsMember({"raw", "hex16"}));

    // ---- sample ----
    std::int64_t n = 0;
    double beta = 4.0, c_p = 1.0, zeta = 1.0;
    std::uint64_t seed = 0;
    bool root4x = false;
    std::string out_path;
    auto* cmd_sample = app.add_subcommand("sample", "build and dump a sample tree");
    cmd_sample->add_option("--n", n)->required();
    cmd_sample->add_option("--b", b)->required();
    cmd_sample->add_option("--beta", beta)->required();
    cmd_sample->add_option("--seed", seed)->required();
    cmd_sample->add_option("--c-p", c_p);
    cmd_sample->add_option("--zeta", zeta);
    cmd_sample->add_flag("--root4x", root4x, "give the root precision 4*beta");
    cmd_sample->add_option("--out", out_path);

    // ---- approx ----
    double single_beta = 0;
    auto* cmd_approx = app.add_subcommand("approx", "sampled distance estimate");
    cmd_approx->add_option("file_x", fx)->required();
    cmd_approx->add_option("file_y", fy)->required();
    cmd_approx->add_option("--b", b);
    cmd_approx->add_option("--seed", seed)->required();
    cmd_approx->add_option("--beta", single_beta,
                           "run a single threshold decision at this beta");
    cmd_approx->add_option("--c-p", c_p);
    cmd_approx->add_option("--codec", codec.name)->check(CLI::IsMember({"raw", "hex16"}));

    // ---- dtep ----
    auto* cmd_dtep = app.add_subcommand("dtep", "far/close threshold decision");
    cmd_dtep->add_option("file_x", fx)->required();
    cmd_dtep->add_option("file_y", fy)->required();
    cmd_dtep->add_option("--b", b);
    cmd_dtep->add_option("--beta", beta)->required();
    cmd_dtep->add_option("--seed", seed)->required();
    cmd_dtep->add_option("--c-p", c_p);
    cmd_dtep->add_option("--codec", codec.name)->check(CLI::IsMember({"raw", "hex16"}));

    // ---- gen-hard ----
    HardInstanceParams hp;
    std::string which = "same", out_x, out_y, manifest;
    auto* cmd_gen = app.add_subcommand("gen-hard", "generate a hard instance pair");
    cmd_gen->add_option("--sigma", hp.sigma);
    cmd_gen->add_option("--block-len", hp.block_len);
    cmd_gen->add_option("--shift-mag", hp.shift_mag);
    cmd_gen->add_option("--levels", hp.levels);
    cmd_gen->add_option("--bin-len", hp.bin_len);
    cmd_gen->add_option("--seed", seed)->required();
    cmd_gen->add_option("--which", which)->check(CLI::IsMember({"same", "cross"}));
    cmd_gen->add_option("--out-x", out_x)->required();
    cmd_gen->add_option("--out-y", out_y)->required();
    cmd_gen->add_option("--manifest", manifest);

    // ---- similarity ----
    std::vector<std::string> dist_files;
    auto* cmd_sim = app.add_subcommand(
        "similarity", "similarity of explicit string distributions");
    cmd_sim->add_option("files", dist_files, "distribution files (prob string per line)")
        ->required()
        ->expected(-2);

    // ---- bench ----
    std::vector<std::int64_t> sizes;
    std::vector<double> betas;
    int trials = 3;
    std::string family = "random-edits";
    Symbol sigma = 256;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    auto* cmd_bench = app.add_subcommand("bench", "approximation ratio harness");
    cmd_bench->add_option("--sizes", sizes)->required()->delimiter(',');
    cmd_bench->add_option("--b", b);
    cmd_bench->add_option("--betas", betas)->required()->delimiter(',');
    cmd_bench->add_option("--trials", trials)->check(CLI::Range(0, 1 << 20));
    cmd_bench->add_option("--seed", seed)->required();
    cmd_bench->add_option("--family", family)
        ->check(CLI::IsMember({"random", "random-edits", "rotations", "hard-pairs"}));
    cmd_bench->add_option("--sigma", sigma);
    cmd_bench->add_option("--c-p", c_p);
    cmd_bench->add_option("--jobs", jobs);
    cmd_bench->add_option("--out", out_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_exact) {
            Text x = read_text_file(fx, codec.get());
            Text y = read_text_file(fy, codec.get());
            unify_alphabet(x, y);
            if (x.size() > 100000 || y.size() > 100000)
                std::cerr << "warning: quadratic oracle above n = 1e5, this will be slow\n";
            const double t0 = now_ms();
            std::int64_t v = 0;
            if (metric == "ed") v = ed(x, y);
            else if (metric == "edd") v = edd(x, y);
            else v = lcs(x, y);
            const double t1 = now_ms();
            std::cout << metric << "=" << v << "\n";
            std::cout << "millis=" << (t1 - t0) << "\n";
        } else if (*cmd_edist) {
            Text x = read_text_file(fx, codec.get());
            Text y = read_text_file(fy, codec.get());
            PaddedPair pp = pad_pair(x, y, b);
            TreeParams params = make_tree_params(pp.n, b, 2.0, 0);
            const double t0 = now_ms();
            const std::int64_t v = exact_tree_distance(pp.x, pp.y, params);
            const double t1 = now_ms();
            std::cout << "edist=" << v << "\n";
            std::cout << "n=" << pp.n << "\nmillis=" << (t1 - t0) << "\n";
        } else if (*cmd_sample) {
            TreeParams params = make_tree_params(n, b, beta, seed, c_p, zeta);
            params.root_precision_x4 = root4x;
            SampleTree tree = build_sample_tree(params);
            if (!out_path.empty()) {
                std::ofstream out(out_path);
                if (!out) throw std::runtime_error("cannot open: " + out_path);
                tree.serialize(out);
            } else {
                tree.serialize(std::cout);
            }
            std::cout << "queries=" << tree.query_count() << "\n";
        } else if (*cmd_approx) {
            Text x = read_text_file(fx, codec.get());
            Text y = read_text_file(fy, codec.get());
            if (single_beta > 0) {
                PaddedPair pp = pad_pair(x, y, b);
                TreeParams params =
                    make_tree_params(pp.n, b, single_beta, seed, c_p);
                SampleTree tree = build_sample_tree(params);
                EstimateReport rep = estimate_tree_distance(pp.x, pp.y, tree);
                std::cout << rep.serialize();
            } else {
                ApproxResult res = approximate_ed(x, y, b, seed, c_p);
                std::cout << "estimate=" << res.estimate << "\n";
                std::cout << "queries=" << res.queries << "\n";
                std::cout << "millis=" << res.millis << "\n";
                std::cout << "betas_tried=" << res.trail.size() << "\n";
            }
        } else if (*cmd_dtep) {
            Text x = read_text_file(fx, codec.get());
            Text y = read_text_file(fy, codec.get());
            PaddedPair pp = pad_pair(x, y, b);
            TreeParams params = make_tree_params(pp.n, b, beta, seed, c_p);
            Decision d = dtep_decide(pp.x, pp.y, beta, params);
            std::cout << (d == Decision::kFar ? "far" : "close") << "\n";
        } else if (*cmd_gen) {
            hp.seed = seed;
            Rng rng(derive_seed(seed, stream::kHardDraw));
            HardPair pair = gen_hard_pair(
                hp, which == "same" ? HardPairKind::kSame : HardPairKind::kCross,
                rng);
            write_text_file(out_x, pair.first);
            write_text_file(out_y, pair.second);
            std::ostringstream mf;
            mf << "#edist-hard v1\n";
            mf << "sigma=" << hp.sigma << "\nblock_len=" << hp.block_len
               << "\nshift_mag=" << hp.shift_mag << "\nlevels=" << hp.levels
               << "\nbin_len=" << hp.bin_len << "\nseed=" << seed
               << "\nwhich=" << which << "\nlen=" << pair.first.size() << "\n";
            mf << std::hex;
            mf << "digest_x=" << text_digest(pair.first) << "\n";
            mf << "digest_y=" << text_digest(pair.second) << "\n";
            for (std::size_t a = 0; a < pair.base_strings.size(); ++a)
                mf << "base_digest_" << a << "="
                   << text_digest(pair.base_strings[a]) << "\n";
            if (!manifest.empty())
                write_file(manifest, mf.str());
            else
                std::cout << mf.str();
        } else if (*cmd_sim) {
            std::vector<ExplicitDist> dists;
            for (const auto& f : dist_files) dists.push_back(read_distribution(f));
            std::vector<Pmf> full;
            std::vector<std::int64_t> all_pos;
            for (std::size_t i = 0; i < dists[0].text_len(); ++i)
                all_pos.push_back(static_cast<std::int64_t>(i));
            for (const auto& d : dists) full.push_back(projected_pmf(d, all_pos));
            std::cout << "alpha=" << similarity_alpha(full) << "\n";
            std::cout << "uniform_alpha=" << uniform_similarity(dists) << "\n";
        } else if (*cmd_bench) {
            return run_bench(sizes, b, betas, trials, seed, family, sigma, c_p,
                             out_path, jobs);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
