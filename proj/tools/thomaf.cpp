#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "thomaf/corpus.hpp"

namespace {

struct cli_state {
    std::string file;
    thomaf::run_options opt;
    bool json = false;
    unsigned workers = 1;
};

long long env_max_steps() {
    const char* raw = std::getenv("THOMAF_MAX_STEPS");
    if (!raw) return thomaf::default_max_steps;
    char* end = nullptr;
    long long v = std::strtoll(raw, &end, 10);
    if (end == raw || *end != '\0' || v < 1) {
        std::fprintf(stderr, "ignoring invalid THOMAF_MAX_STEPS '%s'\n", raw);
        return thomaf::default_max_steps;
    }
    return v;
}

void add_common(CLI::App* sub, cli_state& st) {
    sub->add_option("--max-steps", st.opt.max_steps,
                    "reduction step budget (env THOMAF_MAX_STEPS overrides the default)");
    sub->add_option("--precision", st.opt.precision, "series truncation order for arc checks");
    sub->add_option("--margin", st.opt.margin,
                    "spare orders required beyond the deepest pivot to accept 'holds'");
    sub->add_option("--arc-degree-bound", st.opt.arc_degree_bound,
                    "degree cap for generated monomial arcs");
    sub->add_flag("--json", st.json, "machine readable report on stdout");
}

int emit(const thomaf::report& rep, bool json,
         std::chrono::steady_clock::time_point started) {
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    std::cout << (json ? thomaf::to_json(rep) : thomaf::to_text(rep));
    std::fprintf(stderr, "time: %lld ms\n", static_cast<long long>(elapsed));
    return rep.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certificates for conormal geometry of polynomial families"};
    app.require_subcommand(1);

    cli_state st;
    st.opt.max_steps = env_max_steps();

    static const char* kFileCommands[] = {
        "gb",        "dim",          "conormal",     "relconormal",      "fiber",
        "join",      "decompose",    "af-exact",     "af-arcs",          "whitney-fiber",
        "rees-fiber", "remark-check", "components-check", "trotman",     "pipeline"};
    static const char* kDescriptions[] = {
        "reduced Groebner basis of the defining ideal",
        "dimension of the defined variety",
        "conormal space of X, as a saturated bigraded ideal",
        "conormal space of X relative to f",
        "covector fibers over the origin",
        "join of the covector of f at the origin with the conormal fiber",
        "check the fiber of the relative conormal against its two-piece cover",
        "exact stratification certificate by radical membership",
        "stratification test along explicit or generated arcs",
        "fiber dependence condition along arcs in the special fiber",
        "Rees kernel of a module family and its two fibers over the origin",
        "fiber identity for the family kernel after removing the bad locus",
        "fiber identity under the small-special-fiber hypothesis",
        "threshold family: closed form against the arc check",
        "two-stage certification: conormal fiber dimension plus arc check"};

    std::string picked;
    for (std::size_t i = 0; i < std::size(kFileCommands); ++i) {
        CLI::App* sub = app.add_subcommand(kFileCommands[i], kDescriptions[i]);
        sub->add_option("file", st.file, "problem file")->required()->check(CLI::ExistingFile);
        add_common(sub, st);
        if (std::string(kFileCommands[i]) == "pipeline")
            sub->add_flag("--cross-check", st.opt.cross_check,
                          "also run the exact certificate and report agreement");
        sub->callback([&picked, name = std::string(kFileCommands[i])] { picked = name; });
    }

    CLI::App* corpus = app.add_subcommand("corpus", "run every problem in a directory "
                                                    "against its expectation sidecar");
    corpus->add_option("dir", st.file, "corpus directory")->required();
    corpus->add_option("--workers", st.workers, "concurrent cases")->check(CLI::PositiveNumber);
    add_common(corpus, st);

    CLI11_PARSE(app, argc, argv);

    auto started = std::chrono::steady_clock::now();
    try {
        if (corpus->parsed()) {
            thomaf::corpus_result res = thomaf::run_corpus(st.file, st.opt, st.workers);
            return emit(res.summary, st.json, started);
        }
        thomaf::report rep =
            thomaf::run_command(picked, thomaf::read_file(st.file), st.opt);
        return emit(rep, st.json, started);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
