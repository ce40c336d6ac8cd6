#include "virc1/characters.hpp"
#include "virc1/errors.hpp"
#include "virc1/fock.hpp"
#include "virc1/json_io.hpp"
#include "virc1/linalg.hpp"
#include "virc1/partition.hpp"
#include "virc1/rational.hpp"
#include "virc1/sector.hpp"
#include "virc1/sugawara.hpp"
#include "virc1/verma.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

namespace {

using virc1::Json;
using virc1::Rational;

struct Outcome {
    Json params = Json::object();
    Json result = Json::object();
    bool pass = true;
    std::vector<std::string> lines;
};

struct WorkCaps {
    long long level = 20;
    long long order = 50;
};

void require_level(long long value, const WorkCaps& caps, const char* what) {
    if (value < 0) throw std::domain_error(std::string(what) + " must be nonnegative");
    if (value > caps.level) {
        throw std::domain_error(std::string(what) + " exceeds the work cap (" +
                                std::to_string(caps.level) + "); raise --max-work to allow it");
    }
}

void require_order(long long value, const WorkCaps& caps, const char* what) {
    if (value < 0) throw std::domain_error(std::string(what) + " must be nonnegative");
    if (value > caps.order) {
        throw std::domain_error(std::string(what) + " exceeds the work cap (" +
                                std::to_string(caps.order) + "); raise --max-work to allow it");
    }
}

virc1::sector::Dim parse_dim(const std::string& text) {
    if (text == "inf" || text == "infinity") return virc1::sector::Dim::infinite();
    return virc1::sector::Dim::finite(virc1::rational_from_string(text));
}

Rational rational_from_json_number(const Json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return virc1::rational_from_string(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a \"p/q\" string");
}

virc1::sector::Dim dim_from_json_entry(const Json& j) {
    if (j.is_string()) return parse_dim(j.get<std::string>());
    return virc1::sector::Dim::finite(rational_from_json_number(j));
}

Json parse_json_argument(const std::string& text, const char* what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error&) {
        throw std::invalid_argument(std::string(what) + " is not valid JSON");
    }
}

Json partition_to_json(const virc1::Partition& p) {
    Json arr = Json::array();
    for (unsigned part : p.parts()) arr.push_back(part);
    return arr;
}

Json character_table(const virc1::characters::Character& ch) {
    return virc1::to_json(ch);
}

void describe_character(Outcome& out, const virc1::characters::Character& ch) {
    out.lines.push_back("offset: " + virc1::to_string(ch.offset));
    out.lines.push_back("order: " + std::to_string(ch.series.order()));
    std::string coeffs = "coeffs:";
    for (std::int64_t c : ch.series.coefficients()) coeffs += " " + std::to_string(c);
    out.lines.push_back(std::move(coeffs));
}

Outcome run_partitions(long long n, bool count_only, const WorkCaps& caps) {
    require_level(n, caps, "n");
    Outcome out;
    out.params["n"] = n;
    out.params["count_only"] = count_only;
    const auto parts = virc1::enumerate_partitions(static_cast<unsigned>(n));
    out.result["n"] = n;
    out.result["count"] = parts.size();
    out.lines.push_back("p(" + std::to_string(n) + ") = " + std::to_string(parts.size()));
    if (!count_only) {
        Json arr = Json::array();
        for (const auto& p : parts) {
            arr.push_back(partition_to_json(p));
            out.lines.push_back(virc1::to_string(p));
        }
        out.result["partitions"] = std::move(arr);
    }
    return out;
}

Outcome run_verify_virasoro(const std::string& q_text, long long max_mode, long long max_level,
                            const WorkCaps& caps) {
    const Rational q = virc1::rational_from_string(q_text);
    require_level(max_level, caps, "max-level");
    require_level(max_mode, caps, "max-mode");
    const unsigned levels = static_cast<unsigned>(max_level);
    const int modes = static_cast<int>(max_mode);

    Outcome out;
    out.params["q"] = virc1::to_json(q);
    out.params["max_mode"] = max_mode;
    out.params["max_level"] = max_level;

    Json failures = Json::array();
    std::size_t pairs = 0;
    for (int n = -modes; n <= modes; ++n) {
        for (int m = -modes; m <= modes; ++m) {
            ++pairs;
            const auto report = virc1::sugawara::commutator_check(n, m, q, levels);
            if (report.pass) continue;
            out.pass = false;
            Json f = Json::object();
            f["n"] = n;
            f["m"] = m;
            f["level"] = report.counterexample->level;
            f["row"] = report.counterexample->row;
            f["col"] = report.counterexample->col;
            f["lhs"] = virc1::to_json(report.counterexample->lhs);
            f["rhs"] = virc1::to_json(report.counterexample->rhs);
            failures.push_back(std::move(f));
        }
    }
    out.result["pairs_checked"] = pairs;
    out.result["commutators_pass"] = failures.empty();
    out.result["failures"] = std::move(failures);
    out.lines.push_back("commutator relations: " + std::to_string(pairs) + " mode pairs on levels 0.." +
                        std::to_string(levels) + (out.pass ? " all match" : " MISMATCH"));

    bool adjoint_pass = true;
    for (int n = 0; n <= modes; ++n) {
        if (!virc1::sugawara::adjoint_check(n, q, levels)) adjoint_pass = false;
    }
    out.result["adjoint_pass"] = adjoint_pass;
    out.pass = out.pass && adjoint_pass;
    out.lines.push_back(std::string("adjoint relations: ") + (adjoint_pass ? "match" : "MISMATCH"));

    if (modes >= 2) {
        // [L_2, L_{-2}] = 4 L_0 + central on the vacuum line; L_{-2} L_2
        // vanishes there, so the central part is the residue after 4 L_0.
        const auto l2 = virc1::sugawara::build_L(2, q, 2);
        const auto lm2 = virc1::sugawara::build_L(-2, q, 0);
        Rational value = (l2.matrix * lm2.matrix).entry(0, 0);
        Rational l0 = q * q;
        l0 /= 2;
        value -= 4 * l0;
        const bool central_ok = value == virc1::sugawara::central_term(2);
        out.result["central_term"] = Json::object();
        out.result["central_term"]["n"] = 2;
        out.result["central_term"]["m"] = -2;
        out.result["central_term"]["value"] = virc1::to_json(value);
        out.pass = out.pass && central_ok;
        out.lines.push_back("central term for (2,-2): " + virc1::to_string(value));
    }
    return out;
}

Outcome run_character_fock(const std::string& q_text, long long order, const WorkCaps& caps) {
    const Rational q = virc1::rational_from_string(q_text);
    require_order(order, caps, "order");
    Outcome out;
    out.params["kind"] = "fock";
    out.params["q"] = virc1::to_json(q);
    out.params["order"] = order;
    const auto ch = virc1::characters::fock_character(q, static_cast<unsigned>(order));
    out.result = character_table(ch);
    describe_character(out, ch);
    return out;
}

Outcome run_character_irrep(const std::string& h_text, long long order, const WorkCaps& caps) {
    const Rational h = virc1::rational_from_string(h_text);
    require_order(order, caps, "order");
    Outcome out;
    out.params["kind"] = "irrep";
    out.params["h"] = virc1::to_json(h);
    out.params["order"] = order;
    const auto ch = virc1::verma::irreducible_character(h, static_cast<unsigned>(order));
    out.result = character_table(ch);
    describe_character(out, ch);
    return out;
}

Outcome run_branch(const std::string& q_text, long long order, const WorkCaps& caps) {
    const Rational q = virc1::rational_from_string(q_text);
    require_order(order, caps, "order");
    Outcome out;
    out.params["q"] = virc1::to_json(q);
    out.params["order"] = order;
    const auto ch = virc1::characters::fock_character(q, static_cast<unsigned>(order));
    const auto result = virc1::characters::branch(ch, static_cast<unsigned>(order));
    out.result = virc1::to_json(result);
    for (const auto& [h, mult] : result.components) {
        out.lines.push_back("component h=" + virc1::to_string(h) + " multiplicity " +
                            std::to_string(mult));
    }
    out.lines.push_back(result.succeeded() ? "residual: zero through the trusted order"
                                           : "residual: NONZERO");
    out.pass = result.succeeded();
    return out;
}

Outcome run_shapovalov(const std::string& c_text, const std::string& h_text, long long level,
                       const WorkCaps& caps) {
    const Rational c = virc1::rational_from_string(c_text);
    const Rational h = virc1::rational_from_string(h_text);
    require_level(level, caps, "level");
    const virc1::verma::LowestWeight w(c, h);

    Outcome out;
    out.params["c"] = virc1::to_json(c);
    out.params["h"] = virc1::to_json(h);
    out.params["level"] = level;
    Json rows = Json::array();
    for (long long lvl = 0; lvl <= level; ++lvl) {
        const auto gram = virc1::verma::gram_matrix(w, static_cast<unsigned>(lvl));
        const Rational det = gram.matrix.determinant();
        const std::size_t kernel_dim = virc1::verma::kernel(gram).size();
        Json row = Json::object();
        row["level"] = lvl;
        row["dim"] = gram.matrix.rows();
        row["det"] = virc1::to_json(det);
        row["kernel_dim"] = kernel_dim;
        rows.push_back(std::move(row));
        out.lines.push_back("level " + std::to_string(lvl) + ": dim " +
                            std::to_string(gram.matrix.rows()) + ", det " + virc1::to_string(det) +
                            ", kernel dim " + std::to_string(kernel_dim));
    }
    out.result["levels"] = std::move(rows);
    return out;
}

Outcome run_lwv(const std::string& q_text, long long max_level, const WorkCaps& caps) {
    const Rational q = virc1::rational_from_string(q_text);
    require_level(max_level, caps, "max-level");
    Outcome out;
    out.params["q"] = virc1::to_json(q);
    out.params["max_level"] = max_level;
    Json dims = Json::array();
    for (long long lvl = 0; lvl <= max_level; ++lvl) {
        const auto basis =
            virc1::sugawara::find_lowest_weight_vectors(q, static_cast<unsigned>(lvl));
        dims.push_back(basis.size());
        out.lines.push_back("level " + std::to_string(lvl) + ": " + std::to_string(basis.size()) +
                            " lowest weight vector" + (basis.size() == 1 ? "" : "s"));
    }
    out.result["dims"] = std::move(dims);
    return out;
}

Outcome run_sector_rest_dim(const std::string& index_text, const std::string& d_text) {
    const auto index = parse_dim(index_text);
    const auto d = parse_dim(d_text);
    Outcome out;
    out.params["index"] = virc1::to_json(index);
    out.params["d"] = virc1::to_json(d);
    const auto value = virc1::sector::restricted_dimension(index, d);
    out.result["value"] = virc1::to_json(value);
    out.lines.push_back("restricted dimension: " + virc1::sector::to_string(value));
    return out;
}

virc1::sector::SectorTable table_from_text(const std::string& dims_text) {
    const Json arr = parse_json_argument(dims_text, "--dims");
    if (!arr.is_array() || arr.empty()) {
        throw std::invalid_argument("--dims must be a nonempty JSON array");
    }
    std::vector<std::pair<std::string, virc1::sector::Dim>> entries;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        entries.emplace_back("pi_" + std::to_string(i), dim_from_json_entry(arr[i]));
    }
    return virc1::sector::SectorTable::make(std::move(entries));
}

Outcome run_sector_mu(const std::string& dims_text) {
    const auto table = table_from_text(dims_text);
    Outcome out;
    Json dims = Json::array();
    for (const auto& [label, dim] : table.entries) dims.push_back(virc1::to_json(dim));
    out.params["dims"] = std::move(dims);
    const auto mu = virc1::sector::global_index(table);
    out.result["mu"] = virc1::to_json(mu);
    out.lines.push_back("global index: " + virc1::sector::to_string(mu));
    return out;
}

Outcome run_sector_sub_mu(const std::string& index_text, const std::string& mu_text) {
    const auto index = parse_dim(index_text);
    const auto mu_a = parse_dim(mu_text);
    Outcome out;
    out.params["index"] = virc1::to_json(index);
    out.params["mu_a"] = virc1::to_json(mu_a);
    const auto mu_b = virc1::sector::subsystem_global_index(index, mu_a);
    out.result["mu_b"] = virc1::to_json(mu_b);
    out.lines.push_back("subsystem global index: " + virc1::sector::to_string(mu_b));
    return out;
}

Outcome run_sector_twisted_bound(const std::string& groups_text, const std::string& index_text,
                                 const std::string& mu_text, const std::string& dims_text) {
    const Json arr = parse_json_argument(groups_text, "--groups");
    if (!arr.is_array() || arr.empty()) {
        throw std::invalid_argument("--groups must be a nonempty JSON array of arrays");
    }
    virc1::sector::UntwistedGrouping grouping{{}, parse_dim(index_text)};
    for (const Json& g : arr) {
        if (!g.is_array()) throw std::invalid_argument("each group must be a JSON array");
        std::vector<virc1::sector::Dim> group;
        for (const Json& d : g) group.push_back(dim_from_json_entry(d));
        grouping.groups.push_back(std::move(group));
    }
    std::optional<virc1::sector::Dim> mu_a;
    if (!mu_text.empty()) mu_a = parse_dim(mu_text);
    std::optional<virc1::sector::SectorTable> dims;
    if (!dims_text.empty()) dims = table_from_text(dims_text);

    Outcome out;
    Json groups = Json::array();
    for (const auto& g : grouping.groups) {
        Json one = Json::array();
        for (const auto& d : g) one.push_back(virc1::to_json(d));
        groups.push_back(std::move(one));
    }
    out.params["groups"] = std::move(groups);
    out.params["index"] = virc1::to_json(grouping.index);
    if (mu_a) out.params["mu_a"] = virc1::to_json(*mu_a);

    const auto bound = virc1::sector::twisted_lower_bound(grouping, mu_a, dims);
    out.result["bound"] = virc1::to_json(bound);
    const bool forces = bound.is_finite() && bound.value() >= 2;
    out.result["forces_twisted_sector"] = forces;
    out.lines.push_back("lower bound: " + virc1::sector::to_string(bound));
    out.lines.push_back(forces ? "a twisted sector is forced"
                               : "no twisted sector is forced by this bound");
    return out;
}

Outcome run_sector_verdict(const std::string& h_text) {
    const Rational h = virc1::rational_from_string(h_text);
    Outcome out;
    out.params["h"] = virc1::to_json(h);
    const auto verdict = virc1::sector::c1_continuum_verdict(h);
    out.result = virc1::to_json(verdict);
    out.lines.push_back("h = " + virc1::to_string(h));
    out.lines.push_back("dimension = " + virc1::sector::to_string(verdict.dimension));
    out.lines.push_back(std::string("conjectural = ") + (verdict.conjectural ? "yes" : "no"));
    out.lines.push_back("justification:");
    for (std::size_t i = 0; i < verdict.justification.size(); ++i) {
        out.lines.push_back("  " + std::to_string(i + 1) + ". " + verdict.justification[i]);
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Sugawara/Virasoro checks on charged bosonic Fock spaces at c=1"};
    app.require_subcommand(1);
    // --h is an option below, so help must not claim -h.
    app.set_help_flag("--help", "print this help message and exit");
    auto subcommand = [](CLI::App* parent, const std::string& name, const std::string& desc) {
        CLI::App* sub = parent->add_subcommand(name, desc);
        sub->set_help_flag("--help", "print this help message and exit");
        sub->fallthrough(); // global flags (--json, --max-work) may trail
        return sub;
    };

    bool json_mode = false;
    long long max_work = -1;
    app.add_flag("--json", json_mode, "emit one JSON report on stdout");
    app.add_option("--max-work", max_work, "cap on levels and series orders (default 20/50)")
        ->envname("VIRC1_MAX_WORK")
        ->check(CLI::NonNegativeNumber);

    std::function<Outcome(const WorkCaps&)> run;
    std::string command;
    auto select = [&](const std::string& name, std::function<Outcome(const WorkCaps&)> fn) {
        command = name;
        run = std::move(fn);
    };

    long long n = 0;
    bool count_only = false;
    auto* partitions = subcommand(&app, "partitions", "list the partitions of n");
    partitions->add_option("n", n, "level to enumerate")->required();
    partitions->add_flag("--count-only", count_only, "report the count only");
    partitions->callback([&] {
        select("partitions", [&](const WorkCaps& caps) { return run_partitions(n, count_only, caps); });
    });

    std::string q_text = "0";
    long long max_mode = 3, max_level = 6;
    auto* verify = subcommand(&app, "verify-virasoro",
                                      "check the commutation and adjoint relations of the L_n");
    verify->add_option("--q", q_text, "charge")->required();
    verify->add_option("--max-mode", max_mode, "check |n|,|m| up to this")->required();
    verify->add_option("--max-level", max_level, "check levels up to this")->required();
    verify->callback([&] {
        select("verify-virasoro", [&](const WorkCaps& caps) {
            return run_verify_virasoro(q_text, max_mode, max_level, caps);
        });
    });

    std::string char_q = "0", char_h = "0";
    long long char_order = 10;
    auto* character = subcommand(&app, "character", "print a formal character");
    character->require_subcommand(1);
    auto* char_fock = subcommand(character, "fock", "character of a charged Fock space");
    char_fock->add_option("--q", char_q, "charge")->required();
    char_fock->add_option("--order", char_order, "truncation order")->required();
    char_fock->callback([&] {
        select("character fock",
               [&](const WorkCaps& caps) { return run_character_fock(char_q, char_order, caps); });
    });
    auto* char_irrep = subcommand(character, "irrep", "irreducible c=1 character");
    char_irrep->add_option("--h", char_h, "lowest conformal weight")->required();
    char_irrep->add_option("--order", char_order, "truncation order")->required();
    char_irrep->callback([&] {
        select("character irrep",
               [&](const WorkCaps& caps) { return run_character_irrep(char_h, char_order, caps); });
    });

    std::string branch_q = "0";
    long long branch_order = 10;
    auto* branch = subcommand(&app, "branch", "decompose a Fock character into irreducibles");
    branch->add_option("--q", branch_q, "charge")->required();
    branch->add_option("--order", branch_order, "truncation order")->required();
    branch->callback([&] {
        select("branch",
               [&](const WorkCaps& caps) { return run_branch(branch_q, branch_order, caps); });
    });

    std::string shap_c = "1", shap_h = "0";
    long long shap_level = 4;
    auto* shapovalov = subcommand(&app, "shapovalov", "Gram matrices of a Verma module");
    shapovalov->add_option("--c", shap_c, "central charge")->required();
    shapovalov->add_option("--h", shap_h, "lowest conformal weight")->required();
    shapovalov->add_option("--level", shap_level, "compute levels up to this")->required();
    shapovalov->callback([&] {
        select("shapovalov", [&](const WorkCaps& caps) {
            return run_shapovalov(shap_c, shap_h, shap_level, caps);
        });
    });

    std::string lwv_q = "0";
    long long lwv_level = 6;
    auto* lwv = subcommand(&app, "lwv", "census of lowest weight vectors per level");
    lwv->add_option("--q", lwv_q, "charge")->required();
    lwv->add_option("--max-level", lwv_level, "levels to scan")->required();
    lwv->callback([&] {
        select("lwv", [&](const WorkCaps& caps) { return run_lwv(lwv_q, lwv_level, caps); });
    });

    auto* sector_cmd = subcommand(&app, "sector", "exact statistical dimension arithmetic");
    sector_cmd->require_subcommand(1);

    std::string sec_index = "1", sec_d = "1";
    auto* rest_dim = subcommand(sector_cmd, "rest-dim", "dimension of a restricted sector");
    rest_dim->add_option("--index", sec_index, "subtheory index, \"p/q\" or inf")->required();
    rest_dim->add_option("--d", sec_d, "sector dimension, \"p/q\" or inf")->required();
    rest_dim->callback([&] {
        select("sector rest-dim",
               [&](const WorkCaps&) { return run_sector_rest_dim(sec_index, sec_d); });
    });

    std::string sec_dims;
    auto* mu = subcommand(sector_cmd, "mu", "global index of a sector table");
    mu->add_option("--dims", sec_dims, "JSON array of sector dimensions, vacuum first")->required();
    mu->callback([&] {
        select("sector mu", [&](const WorkCaps&) { return run_sector_mu(sec_dims); });
    });

    std::string sec_mu_a = "1";
    auto* sub_mu = subcommand(sector_cmd, "sub-mu", "global index of a finite-index subtheory");
    sub_mu->add_option("--index", sec_index, "subtheory index")->required();
    sub_mu->add_option("--mu", sec_mu_a, "global index of the larger theory")->required();
    sub_mu->callback([&] {
        select("sector sub-mu",
               [&](const WorkCaps&) { return run_sector_sub_mu(sec_index, sec_mu_a); });
    });

    std::string sec_groups, sec_mu_opt, sec_dims_opt;
    auto* twisted = subcommand(sector_cmd, "twisted-bound",
                                               "lower bound forcing twisted sectors");
    twisted->add_option("--groups", sec_groups, "JSON array of groups of dimensions, vacuum group first")
        ->required();
    twisted->add_option("--index", sec_index, "subtheory index (default 1)");
    twisted->add_option("--mu-a", sec_mu_opt, "global index of the subtheory, for cross-checking");
    twisted->add_option("--dims", sec_dims_opt, "subtheory sector table, for cross-checking");
    twisted->callback([&] {
        select("sector twisted-bound", [&](const WorkCaps&) {
            return run_sector_twisted_bound(sec_groups, sec_index, sec_mu_opt, sec_dims_opt);
        });
    });

    std::string sec_h = "0";
    auto* verdict = subcommand(sector_cmd, "verdict", "dimension verdict for a c=1 sector");
    verdict->add_option("--h", sec_h, "lowest conformal weight")->required();
    verdict->callback([&] {
        select("sector verdict", [&](const WorkCaps&) { return run_sector_verdict(sec_h); });
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    WorkCaps caps;
    if (max_work >= 0) {
        caps.level = max_work;
        caps.order = max_work;
    }

    try {
        const auto start = std::chrono::steady_clock::now();
        const Outcome outcome = run(caps);
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();

        Json report = Json::object();
        report["command"] = command;
        report["params"] = outcome.params;
        report["result"] = outcome.result;
        report["status"] = outcome.pass ? "pass" : "fail";
        report["wall_time_ms"] = elapsed;

        if (json_mode) {
            std::cout << report.dump(2) << "\n";
        } else {
            for (const auto& line : outcome.lines) std::cout << line << "\n";
            std::cout << "status: " << (outcome.pass ? "pass" : "fail") << " (" << elapsed
                      << " ms)\n";
        }
        return outcome.pass ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
