// Command-line front end: exact measures, samplers, Monte Carlo experiments,
// and the self-test battery.
#include "CLI11.hpp"

#include "thoma/experiments.hpp"
#include "thoma/hecke.hpp"
#include "thoma/measures.hpp"
#include "thoma/pitman.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace thoma;

namespace {

// Alphabet grammar: "[]", "[2/3,1/3]", or "geom(a,q)".
Alphabet parse_alphabet(const std::string& s) {
    if (s.rfind("geom(", 0) == 0 && s.back() == ')') {
        std::string inner = s.substr(5, s.size() - 6);
        auto comma = inner.find(',');
        if (comma == std::string::npos) throw CLI::ValidationError("geom(a,q) expects two args");
        return Alphabet::geometric(parse_rational(inner.substr(0, comma)),
                                   parse_rational(inner.substr(comma + 1)));
    }
    if (s.empty() || s.front() != '[' || s.back() != ']')
        throw CLI::ValidationError("alphabet: expected [..] or geom(a,q), got " + s);
    std::vector<Rat> vals;
    std::string inner = s.substr(1, s.size() - 2);
    std::stringstream ss(inner);
    std::string tok;
    while (std::getline(ss, tok, ',')) vals.push_back(parse_rational(tok));
    return Alphabet::finite(std::move(vals));
}

struct OmegaOpt {
    std::string alpha = "[]", beta = "[]";
    Thoma build() const { return Thoma(parse_alphabet(alpha), parse_alphabet(beta)); }
    void attach(CLI::App* cmd) {
        cmd->add_option("--alpha", alpha, "alpha alphabet: [2/3,1/3] or geom(a,q)");
        cmd->add_option("--beta", beta, "beta alphabet; gamma is always derived");
    }
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw CLI::ValidationError("cannot open output file " + out_path);
    f << text;
    std::cerr << "wrote " << out_path << "\n";
}

void emit_report(const Report& rep, const std::string& out_path) {
    std::cerr << "# " << rep.config << "\n";
    if (!out_path.empty()) emit(rep.csv(), out_path);
    std::cout << rep.text();
    if (!rep.ok()) throw CLI::RuntimeError("report has failing rows", 1);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coherent measures on partitions, omega-shuffles and their limit laws"};
    app.require_subcommand(1);

    uint64_t seed = 20260823;
    int workers = 1;
    std::string out_path;
    app.add_option("--seed", seed, "RNG seed (every run is deterministic given the seed)")
        ->capture_default_str();
    app.add_option("--workers", workers, "worker threads; results are worker-count independent")
        ->capture_default_str();
    app.add_option("--out", out_path, "write CSV to this path (default: stdout report only)");
    bool exact_mode = false;
    app.add_flag("--exact", exact_mode,
                 "replace sampling by exact enumeration where available "
                 "(sample-shuffle, markov-chain; small n only)");
    auto no_exact = [&] {
        if (exact_mode)
            throw CLI::ValidationError("--exact is not available for this experiment");
    };

    // ------------------------------------------------------------- exact
    auto* exact = app.add_subcommand("exact-measure", "exact partition/permutation measures");
    int ex_n = 4;
    std::string ex_level = "partition";
    OmegaOpt ex_omega;
    exact->add_option("--n", ex_n, "size")->required();
    exact->add_option("--level", ex_level, "partition | permutation | growth");
    ex_omega.attach(exact);
    exact->callback([&] {
        Thoma omega = ex_omega.build();
        if (ex_level == "partition")
            emit(p_measure(ex_n, omega).csv(), out_path);
        else if (ex_level == "permutation")
            emit(q_measure(ex_n, omega).csv(), out_path);
        else if (ex_level == "growth")
            emit(growth_chain_marginal(ex_n, omega).csv(), out_path);
        else
            throw CLI::ValidationError("unknown --level " + ex_level);
    });

    // ------------------------------------------------------------- sample
    auto* samp = app.add_subcommand("sample-shuffle", "draw omega-shuffled permutations");
    int sa_n = 10;
    long long sa_count = 10;
    bool sa_deck = false;
    OmegaOpt sa_omega;
    samp->add_option("--n", sa_n, "permutation size")->required();
    samp->add_option("--count", sa_count, "number of samples")->capture_default_str();
    samp->add_flag("--deck", sa_deck, "use the literal deck construction");
    sa_omega.attach(samp);
    samp->callback([&] {
        Thoma omega = sa_omega.build();
        if (exact_mode) {
            if (sa_n > 8) throw CLI::ValidationError("--exact needs n <= 8 (full enumeration)");
            emit(q_measure(sa_n, omega).csv(), out_path);
            return;
        }
        OmegaShuffler sh(sa_n, omega);
        Rng rng = Rng::substream(seed, 0);
        std::ostringstream os;
        os << "# sample-shuffle n=" << sa_n << " count=" << sa_count << " deck=" << sa_deck
           << " seed=" << seed << "\npermutation,shape\n";
        for (long long i = 0; i < sa_count; ++i) {
            Permutation p = sa_deck ? sh.sample_deck(rng) : sh.sample(rng);
            os << '"';
            for (int k = 1; k <= sa_n; ++k) os << (k > 1 ? " " : "") << p(k);
            os << "\"," << rsk(p).shape.str() << "\n";
        }
        emit(os.str(), out_path);
    });

    // ------------------------------------------------------------- rsk
    auto* rsub = app.add_subcommand("rsk", "row-insert a word and print P, Q and the shape");
    std::vector<int> rs_word;
    rsub->add_option("--word", rs_word, "letters, e.g. --word 6,4,1,8,2")
        ->required()
        ->delimiter(',');
    rsub->callback([&] {
        RskOutput r = rsk(rs_word);
        std::ostringstream os;
        os << "shape " << r.shape.str() << "\n";
        auto dump = [&](const char* tag, const Tableau& t) {
            for (size_t i = 0; i < t.rows().size(); ++i) {
                os << tag << i + 1 << ":";
                for (int x : t.rows()[i]) os << " " << x;
                os << "\n";
            }
        };
        dump("P", r.p);
        dump("Q", r.q);
        emit(os.str(), out_path);
    });

    // ------------------------------------------------------------- lln
    auto* lln = app.add_subcommand("lln", "law of large numbers for chi(2-cycle) and rows");
    std::vector<int> ll_grid{200, 800, 3200};
    long long ll_samples = 100000;
    OmegaOpt ll_omega;
    lln->add_option("--grid", ll_grid, "n values")->capture_default_str();
    lln->add_option("--samples", ll_samples, "samples per n")->capture_default_str();
    ll_omega.attach(lln);
    lln->callback([&] {
        no_exact();
        emit_report(lln_experiment(ll_omega.build(), ll_grid, ll_samples, seed, workers),
                    out_path);
    });

    // ------------------------------------------------------------- clt-char
    auto* cch = app.add_subcommand("clt-char", "character CLT covariance check");
    int cc_n = 2000, cc_l = 2, cc_m = 3;
    long long cc_samples = 100000;
    OmegaOpt cc_omega;
    cch->add_option("--n", cc_n)->capture_default_str();
    cch->add_option("--samples", cc_samples)->capture_default_str();
    cch->add_option("--l", cc_l, "first cycle length (2..4)")->capture_default_str();
    cch->add_option("--m", cc_m, "second cycle length (2..4)")->capture_default_str();
    cc_omega.attach(cch);
    cch->callback([&] {
        no_exact();
        emit_report(clt_char_experiment(cc_omega.build(), cc_n, cc_samples, cc_l, cc_m, seed,
                                        workers),
                    out_path);
    });

    // ------------------------------------------------------------- clt-rows
    auto* crw = app.add_subcommand("clt-rows", "row-length CLT covariance check");
    int cr_n = 2000;
    long long cr_samples = 100000;
    OmegaOpt cr_omega;
    crw->add_option("--n", cr_n)->capture_default_str();
    crw->add_option("--samples", cr_samples)->capture_default_str();
    cr_omega.attach(crw);
    crw->callback([&] {
        no_exact();
        emit_report(clt_rows_experiment(cr_omega.build(), cr_n, cr_samples, seed, workers),
                    out_path);
    });

    // ------------------------------------------------------------- bessel
    auto* bes = app.add_subcommand("bessel", "balanced 2-shuffle longest-row fluctuations");
    int be_n = 10000;
    long long be_samples = 100000;
    bes->add_option("--n", be_n)->capture_default_str();
    bes->add_option("--samples", be_samples)->capture_default_str();
    bes->callback([&] {
        no_exact();
        emit_report(bessel_experiment(be_n, be_samples, seed, workers), out_path); });

    // ------------------------------------------------------------- gue
    auto* gue = app.add_subcommand("gue", "uniform d-shuffle row fluctuations");
    int gu_d = 3, gu_n = 10000;
    long long gu_samples = 100000;
    gue->add_option("--d", gu_d, "letters (2 or 3)")->capture_default_str();
    gue->add_option("--n", gu_n)->capture_default_str();
    gue->add_option("--samples", gu_samples)->capture_default_str();
    gue->callback(
        [&] {
            no_exact();
            emit_report(gue_experiment(gu_d, gu_n, gu_samples, seed, workers), out_path);
        });

    // ------------------------------------------------------------- mixed
    auto* mix = app.add_subcommand("mixed", "mixed-alphabet block fluctuations");
    int mx_n = 10000;
    long long mx_samples = 100000;
    std::vector<std::string> mx_blocks{"1/4^2", "1/6^3"};
    mix->add_option("--n", mx_n)->capture_default_str();
    mix->add_option("--samples", mx_samples)->capture_default_str();
    mix->add_option("--blocks", mx_blocks, "blocks p^d, e.g. --blocks 1/4^2 1/6^3")
        ->capture_default_str();
    mix->callback([&] {
        std::vector<MixedBlock> blocks;
        for (const auto& b : mx_blocks) {
            auto caret = b.find('^');
            MixedBlock mb;
            mb.p = parse_rational(caret == std::string::npos ? b : b.substr(0, caret));
            mb.d = caret == std::string::npos ? 1 : std::stoi(b.substr(caret + 1));
            blocks.push_back(mb);
        }
        no_exact();
        emit_report(mixed_experiment(blocks, mx_n, mx_samples, seed, workers), out_path);
    });

    // ------------------------------------------------------------- markov-chain
    auto* mkv = app.add_subcommand("markov-chain", "sampled growth chain vs exact marginal");
    int mk_n = 6;
    long long mk_samples = 200000;
    OmegaOpt mk_omega;
    mkv->add_option("--n", mk_n)->capture_default_str();
    mkv->add_option("--samples", mk_samples)->capture_default_str();
    mk_omega.attach(mkv);
    mkv->callback([&] {
        Thoma omega = mk_omega.build();
        if (exact_mode) {
            if (mk_n > 8) throw CLI::ValidationError("--exact needs n <= 8 (full enumeration)");
            Report rep;
            rep.title = "young-graph growth chain (exact marginal comparison)";
            rep.config = "experiment=markov-chain exact=1 n=" + std::to_string(mk_n);
            for (int k = 1; k <= mk_n; ++k) {
                auto gm = growth_chain_marginal(k, omega);
                auto pm = p_measure(k, omega);
                bool ok = true;
                for (auto& lam : partitions_of(k)) {
                    Rat a = gm.weights.count(lam) ? gm.weights.at(lam) : Rat(0);
                    Rat b = pm.weights.count(lam) ? pm.weights.at(lam) : Rat(0);
                    if (a != b) ok = false;
                }
                rep.rows.push_back(
                    {"marginal_equals_measure_n" + std::to_string(k), 1, ok ? 1.0 : 0.0, 0, ok,
                     "exact"});
            }
            emit_report(rep, out_path);
            return;
        }
        emit_report(markov_chain_experiment(omega, mk_n, mk_samples, seed), out_path);
    });

    // ------------------------------------------------------------- pitman-verify
    auto* pit = app.add_subcommand("pitman-verify", "path-transform identities on random input");
    int pi_d = 3, pi_n = 40;
    long long pi_trials = 2000;
    pit->add_option("--d", pi_d)->capture_default_str();
    pit->add_option("--n", pi_n, "word/path length")->capture_default_str();
    pit->add_option("--trials", pi_trials)->capture_default_str();
    pit->callback(
        [&] {
            no_exact();
            emit_report(pitman_verify(pi_d, pi_n, pi_trials, seed), out_path);
        });

    // ------------------------------------------------------------- qt
    auto* qtc = app.add_subcommand("qt", "two-parameter deformed Plancherel measures");
    int qt_n = 4;
    std::string qt_q = "1/2", qt_t = "2/3";
    bool qt_perm = false;
    qtc->add_option("--n", qt_n)->capture_default_str();
    qtc->add_option("--q", qt_q)->capture_default_str();
    qtc->add_option("--t", qt_t)->capture_default_str();
    qtc->add_flag("--permutation", qt_perm, "emit the permutation-level interpolation instead");
    qtc->callback([&] {
        QtParams params{parse_rational(qt_q), parse_rational(qt_t)};
        emit(qt_perm ? qt_permutation_measure(qt_n, params).csv()
                     : qt_plancherel(qt_n, params).csv(),
             out_path);
    });

    // ------------------------------------------------------------- selftest
    auto* self = app.add_subcommand("selftest", "run the exact invariant battery");
    self->callback([&] {
        int fails = selftest(std::cout);
        if (fails) throw CLI::RuntimeError("selftest failures: " + std::to_string(fails), 1);
    });

    CLI11_PARSE(app, argc, argv);
    return 0;
}
