#pragma once

/**
 * @file cli.hpp
 * @brief Command-line surface: one verb per analysis, JSON on stdout.
 *
 * Exit codes: 0 success, 1 analysis-level negative (not a solution, cover
 * verdict false, hypothesis not met, ...), 2 usage or parse error,
 * 3 enumeration budget exceeded.
 */

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "weq/cover.hpp"
#include "weq/dsl.hpp"
#include "weq/equations.hpp"
#include "weq/json_io.hpp"
#include "weq/nielsen.hpp"
#include "weq/oracle.hpp"
#include "weq/periodicity.hpp"
#include "weq/words.hpp"

namespace weq::cli {

namespace detail {

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open file '" + path + "'", 0, 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline LengthType parse_csv_lengths(const std::string& csv) {
    LengthType L;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw parse_error("invalid length '" + item + "' in '" + csv + "'", 0, 0);
        L.push_back(std::stoll(item));
    }
    if (L.empty()) throw parse_error("empty length vector", 0, 0);
    return L;
}

inline std::set<std::int64_t> parse_csv_values(const std::string& csv) {
    std::set<std::int64_t> I;
    for (auto l : parse_csv_lengths(csv)) I.insert(l);
    return I;
}

/// Parse two one-equation files against a shared name table.
inline std::tuple<WordEquation, WordEquation, NameTable> parse_equation_pair(const std::string& path1,
                                                                             const std::string& path2) {
    const std::string t1 = slurp(path1), t2 = slurp(path2);
    if (parse_equations(t1).system.equations.size() != 1)
        throw parse_error("expected exactly one equation in '" + path1 + "'", 0, 0);
    if (parse_equations(t2).system.equations.size() != 1)
        throw parse_error("expected exactly one equation in '" + path2 + "'", 0, 0);
    ParsedSystem both = parse_equations(t1 + "\n" + t2);
    return {both.system.equations[0], both.system.equations[1], both.names};
}

inline Json base(const std::string& command) {
    Json j;
    j["schema"] = json_schema;
    j["command"] = command;
    return j;
}

inline void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

inline Json json_equation(const WordEquation& e, const NameTable& names) {
    return Json(equation_to_text(e, names));
}

} // namespace detail

/// Runs one command; `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"polynomial methods for word equations"};
    app.require_subcommand(1);
    int exit_code = 0;

    // ---- words -----------------------------------------------------------
    std::string word_arg, u_arg, v_arg;
    int product_cap = 4;

    auto* cmd_encode = app.add_subcommand("encode", "polynomial encoding of a word");
    cmd_encode->add_option("word", word_arg, "word, e.g. 1212 or [1,12,3]")->required();
    cmd_encode->callback([&] {
        Json j = detail::base("encode");
        const Word w = parse_word(word_arg);
        j["word"] = w.to_text();
        j["polynomial"] = encode(w).to_string();
        detail::emit(out, j);
    });

    auto* cmd_root = app.add_subcommand("primitive-root", "primitive root and exponent");
    cmd_root->add_option("word", word_arg)->required();
    cmd_root->callback([&] {
        Json j = detail::base("primitive-root");
        const Word w = parse_word(word_arg);
        const auto pr = primitive_root(w);
        j["word"] = w.to_text();
        j["root"] = pr.root.to_text();
        j["exponent"] = std::to_string(pr.exponent);
        detail::emit(out, j);
    });

    auto* cmd_comm = app.add_subcommand("commutation", "four equivalent commutation conditions");
    cmd_comm->add_option("u", u_arg)->required();
    cmd_comm->add_option("v", v_arg)->required();
    cmd_comm->add_option("--product-cap", product_cap, "max factors in condition 2 products");
    cmd_comm->callback([&] {
        Json j = detail::base("commutation");
        const auto rep = commutation_report(parse_word(u_arg), parse_word(v_arg), product_cap);
        j["u"] = u_arg;
        j["v"] = v_arg;
        j["product_cap"] = std::to_string(product_cap);
        j["rho_equal"] = rep.rho_equal;
        j["all_equal_length_products_equal"] = rep.all_equal_length_products_equal;
        j["nontrivial_relation_exists"] = rep.nontrivial_relation_exists;
        j["rational_encodings_equal"] = rep.rational_encodings_equal;
        j["all_agree"] = rep.all_agree();
        detail::emit(out, j);
        if (!rep.rho_equal) exit_code = 1;
    });

    auto* cmd_fw = app.add_subcommand("fine-wilf", "Fine and Wilf prefix check");
    cmd_fw->add_option("u", u_arg)->required();
    cmd_fw->add_option("v", v_arg)->required();
    cmd_fw->callback([&] {
        Json j = detail::base("fine-wilf");
        const auto rep = fine_wilf_check(parse_word(u_arg), parse_word(v_arg));
        j["u"] = u_arg;
        j["v"] = v_arg;
        j["bound"] = std::to_string(rep.bound);
        j["common_prefix_len"] = std::to_string(rep.common_prefix_len);
        j["applies"] = rep.applies;
        j["roots_equal"] = rep.roots_equal;
        detail::emit(out, j);
        if (!rep.applies) exit_code = 1;
    });

    // ---- equations -------------------------------------------------------
    std::string eq_file, morph_file, file1, file2, inst_file;
    std::string length_csv, bound_csv, values_csv, mode_str = "minimal";
    bool prune = false, all_minors = false;
    int alphabet = 2, jobs = 1;
    std::uint64_t budget = 10'000'000;
    std::optional<std::int64_t> rank_filter;

    auto* cmd_check = app.add_subcommand("check", "is the morphism a solution of every equation");
    cmd_check->add_option("equations", eq_file)->required();
    cmd_check->add_option("morphism", morph_file)->required();
    cmd_check->callback([&] {
        Json j = detail::base("check");
        const ParsedSystem ps = parse_equations(detail::slurp(eq_file));
        const ParsedMorphism pm = parse_morphism(detail::slurp(morph_file), &ps.names);
        j["length_type"] = json_length_type(pm.morphism.length_type());
        Json eqs = Json::array();
        bool all = true;
        for (const auto& e : ps.system.equations) {
            const IntPoly residual = weqpeq_residual(e, pm.morphism);
            const bool ok = is_solution(pm.morphism, e);
            if (ok != residual.is_zero()) throw std::logic_error("check: residual disagrees with equality");
            all = all && ok;
            eqs.push_back(Json{{"equation", detail::json_equation(e, ps.names)},
                               {"residual", residual.to_string()},
                               {"is_solution", ok}});
        }
        j["equations"] = std::move(eqs);
        j["all_solved"] = all;
        detail::emit(out, j);
        if (!all) exit_code = 1;
    });

    auto* cmd_qpoly = app.add_subcommand("qpoly", "q polynomials at a length type");
    cmd_qpoly->add_option("equations", eq_file)->required();
    cmd_qpoly->add_option("--length-type", length_csv)->required();
    cmd_qpoly->callback([&] {
        Json j = detail::base("qpoly");
        const ParsedSystem ps = parse_equations(detail::slurp(eq_file));
        const LengthType L = detail::parse_csv_lengths(length_csv);
        j["length_type"] = json_length_type(L);
        Json eqs = Json::array();
        for (const auto& e : ps.system.equations) {
            Json q = Json::object();
            for (std::size_t x = 0; x < e.n; ++x)
                q[ps.names.name_of(x)] = q_polynomial(e, x, L).to_string();
            eqs.push_back(Json{{"equation", detail::json_equation(e, ps.names)}, {"q", std::move(q)}});
        }
        j["equations"] = std::move(eqs);
        detail::emit(out, j);
    });

    auto* cmd_spoly = app.add_subcommand("spoly", "generalized s polynomials");
    cmd_spoly->add_option("equations", eq_file)->required();
    cmd_spoly->callback([&] {
        Json j = detail::base("spoly");
        const ParsedSystem ps = parse_equations(detail::slurp(eq_file));
        Json eqs = Json::array();
        for (const auto& e : ps.system.equations) {
            Json s = Json::object();
            for (std::size_t x = 0; x < e.n; ++x) s[ps.names.name_of(x)] = s_polynomial(e, x).to_string();
            eqs.push_back(Json{{"equation", detail::json_equation(e, ps.names)}, {"s", std::move(s)}});
        }
        j["equations"] = std::move(eqs);
        detail::emit(out, j);
    });

    auto* cmd_rankbound = app.add_subcommand("rank-bound", "q-matrix rank and solution rank bound");
    cmd_rankbound->add_option("equations", eq_file)->required();
    cmd_rankbound->add_option("--length-type", length_csv)->required();
    cmd_rankbound->callback([&] {
        Json j = detail::base("rank-bound");
        const ParsedSystem ps = parse_equations(detail::slurp(eq_file));
        const LengthType L = detail::parse_csv_lengths(length_csv);
        const auto rep = rank_bound(ps.system, L);
        j["length_type"] = json_length_type(L);
        j["matrix"] = json_matrix(rep.matrix);
        j["matrix_rank"] = std::to_string(rep.matrix_rank);
        j["max_solution_rank"] = std::to_string(rep.max_solution_rank);
        detail::emit(out, j);
    });

    auto* cmd_sameat = app.add_subcommand("same-at", "same solutions at a length type (rank-1 test)");
    cmd_sameat->add_option("equations", eq_file)->required();
    cmd_sameat->add_option("--length-type", length_csv)->required();
    cmd_sameat->callback([&] {
        Json j = detail::base("same-at");
        const ParsedSystem ps = parse_equations(detail::slurp(eq_file));
        const LengthType L = detail::parse_csv_lengths(length_csv);
        const bool same = same_solutions_at(ps.system, L);
        j["length_type"] = json_length_type(L);
        j["same_solutions"] = same;
        detail::emit(out, j);
        if (!same) exit_code = 1;
    });

    auto* cmd_graph = app.add_subcommand("graph", "graph of a system and its components");
    cmd_graph->add_option("equations", eq_file)->required();
    cmd_graph->callback([&] {
        Json j = detail::base("graph");
        const ParsedSystem ps = parse_equations(detail::slurp(eq_file));
        const auto rep = equations_graph(ps.system);
        Json edges = Json::array();
        for (auto [a, b] : rep.edges)
            edges.push_back(Json::array({ps.names.name_of(a), ps.names.name_of(b)}));
        j["edges"] = std::move(edges);
        j["component_count"] = std::to_string(rep.component_count);
        detail::emit(out, j);
    });

    auto* cmd_decompose = app.add_subcommand("decompose", "factor a solution through elementary transformations");
    cmd_decompose->add_option("equations", eq_file)->required();
    cmd_decompose->add_option("morphism", morph_file)->required();
    cmd_decompose->callback([&] {
        Json j = detail::base("decompose");
        const ParsedSystem ps = parse_equations(detail::slurp(eq_file));
        if (ps.system.equations.size() != 1)
            throw parse_error("decompose expects exactly one equation", 0, 0);
        const ParsedMorphism pm = parse_morphism(detail::slurp(morph_file), &ps.names);
        const Decomposition d = decompose(ps.system.equations[0], pm.morphism);
        j["equation"] = detail::json_equation(ps.system.equations[0], ps.names);
        j["decomposition"] = decomposition_to_json(d, ps.names);
        const IndexMorphism f = principal_solution(d);
        Json princ = Json::object();
        for (std::size_t x = 0; x < d.n; ++x) {
            std::string img;
            for (auto y : f.images[x]) {
                if (!img.empty()) img += ' ';
                img += ps.names.name_of(y);
            }
            princ[ps.names.name_of(x)] = img;
        }
        j["principal_solution"] = std::move(princ);
        j["recomposed"] = json_morphism(recompose(d), ps.names);
        detail::emit(out, j);
    });

    auto* cmd_cover = app.add_subcommand("cover", "candidate subspaces covering rank-(n-1) length types");
    cmd_cover->add_option("e1", file1)->required();
    cmd_cover->add_option("e2", file2)->required();
    cmd_cover->add_option("--mode", mode_str)->check(CLI::IsMember({"minimal", "naive"}));
    cmd_cover->add_flag("--all-minors", all_minors);
    auto* prune_flag = cmd_cover->add_flag("--prune", prune, "keep only subspaces with a bounded witness");
    cmd_cover->add_option("--bound", bound_csv, "witness search bound, e.g. 4,4,4")->needs(prune_flag);
    prune_flag->needs(cmd_cover->get_option("--bound"));
    cmd_cover->callback([&] {
        Json j = detail::base("cover");
        auto [e1, e2, names] = detail::parse_equation_pair(file1, file2);
        j["e1"] = detail::json_equation(e1, names);
        j["e2"] = detail::json_equation(e2, names);
        CandidateOptions opts{mode_str == "minimal" ? CoverMode::minimal : CoverMode::naive, all_minors};
        Cover c = candidate_subspaces(e1, e2, opts);
        j["candidates"] = json_cover(c);
        if (prune) {
            const LengthType bound = detail::parse_csv_lengths(bound_csv);
            const PrunedCover pc = prune_cover(c, e1, e2, bound);
            Json p;
            p["bound"] = json_length_type(bound);
            p["solutions_checked"] = std::to_string(pc.solutions_checked);
            Json pruned_cover = json_cover(pc.cover);
            Json witnesses = Json::array();
            for (const auto& w : pc.witnesses) witnesses.push_back(json_morphism(w, names));
            p["cover"] = std::move(pruned_cover);
            p["witnesses"] = std::move(witnesses);
            j["pruned"] = std::move(p);
        }
        detail::emit(out, j);
    });

    auto* cmd_chainbound = app.add_subcommand("chain-bound", "bound on rank-(n-1) chains through a pair");
    cmd_chainbound->add_option("e1", file1)->required();
    cmd_chainbound->add_option("e2", file2)->required();
    cmd_chainbound->add_option("--mode", mode_str)->check(CLI::IsMember({"minimal", "naive"}));
    cmd_chainbound->add_flag("--all-minors", all_minors);
    cmd_chainbound->add_option("--prune-bound", bound_csv, "prune with witnesses up to this bound");
    cmd_chainbound->callback([&] {
        Json j = detail::base("chain-bound");
        auto [e1, e2, names] = detail::parse_equation_pair(file1, file2);
        ChainBoundOptions opts;
        opts.mode = mode_str == "minimal" ? CoverMode::minimal : CoverMode::naive;
        opts.all_minors = all_minors;
        if (!bound_csv.empty()) opts.prune_bound = detail::parse_csv_lengths(bound_csv);
        const auto rep = chain_bound(e1, e2, opts);
        j["e1"] = detail::json_equation(e1, names);
        j["e2"] = detail::json_equation(e2, names);
        j["cover_size"] = std::to_string(rep.cover_size);
        j["chain_bound"] = std::to_string(rep.bound);
        j["worst_case_bound"] = std::to_string(rep.worst_case_bound);
        detail::emit(out, j);
    });

    auto* cmd_balance = app.add_subcommand("balance-check", "unbalanced-pair solution transfer check");
    cmd_balance->add_option("e1", file1)->required();
    cmd_balance->add_option("e2", file2)->required();
    cmd_balance->add_option("--bound", bound_csv)->required();
    cmd_balance->callback([&] {
        Json j = detail::base("balance-check");
        auto [e1, e2, names] = detail::parse_equation_pair(file1, file2);
        const auto rep = balance_check(e1, e2, detail::parse_csv_lengths(bound_csv));
        j["e1"] = detail::json_equation(e1, names);
        j["e2"] = detail::json_equation(e2, names);
        const char* status = rep.status == BalanceReport::Status::not_applicable ? "not-applicable"
                             : rep.status == BalanceReport::Status::inconclusive ? "inconclusive"
                             : rep.status == BalanceReport::Status::verified     ? "verified"
                                                                                 : "refuted";
        j["status"] = status;
        if (rep.balance_subspace) j["balance_subspace"] = json_subspace(*rep.balance_subspace);
        j["hypothesis_witnessed"] = rep.hypothesis_witnessed;
        j["solutions_checked"] = std::to_string(rep.solutions_checked);
        Json cex = Json::array();
        for (const auto& h : rep.counterexamples) cex.push_back(json_morphism(h, names));
        j["counterexamples"] = std::move(cex);
        detail::emit(out, j);
        if (rep.status != BalanceReport::Status::verified) exit_code = 1;
    });

    auto* cmd_pairform = app.add_subcommand("pair-form", "x1... = x2^k x3... shape of a pair");
    cmd_pairform->add_option("e1", file1)->required();
    cmd_pairform->add_option("e2", file2)->required();
    cmd_pairform->add_option("morphism", morph_file)->required();
    cmd_pairform->callback([&] {
        Json j = detail::base("pair-form");
        auto [e1, e2, names] = detail::parse_equation_pair(file1, file2);
        const ParsedMorphism pm = parse_morphism(detail::slurp(morph_file), &names);
        const auto rep = pair_form_check(e1, e2, pm.morphism);
        j["e1"] = detail::json_equation(e1, names);
        j["e2"] = detail::json_equation(e2, names);
        const char* status = rep.status == PairFormReport::Status::matched            ? "matched"
                             : rep.status == PairFormReport::Status::hypothesis_failed ? "hypothesis-failed"
                                                                                       : "pattern-violation";
        j["status"] = status;
        if (rep.k) j["k"] = std::to_string(*rep.k);
        if (!rep.reason.empty()) j["reason"] = rep.reason;
        detail::emit(out, j);
        if (rep.status != PairFormReport::Status::matched) exit_code = 1;
    });

    auto* cmd_period = app.add_subcommand("periodicity", "U_i = V_i on a value set implies all i");
    cmd_period->add_option("instance", inst_file)->required();
    cmd_period->add_option("--values", values_csv, "exponent set, e.g. 0,1")->required();
    cmd_period->callback([&] {
        Json j = detail::base("periodicity");
        const PeriodicityInstance inst = parse_instance(detail::slurp(inst_file));
        const auto I = detail::parse_csv_values(values_csv);
        const auto rep = implies_all(inst, I);
        j["m"] = std::to_string(inst.m());
        j["n"] = std::to_string(inst.n());
        Json vals = Json::array();
        for (auto i : I) vals.push_back(std::to_string(i));
        j["values"] = std::move(vals);
        j["holds_on_values"] = rep.holds_on_I;
        if (rep.holds_for_all)
            j["holds_for_all"] = *rep.holds_for_all;
        else
            j["holds_for_all"] = nullptr;
        Json fails = Json::array();
        for (auto i : rep.failures) fails.push_back(std::to_string(i));
        j["failures"] = std::move(fails);
        if (rep.certificate) j["certificate"] = json_grouped_form(*rep.certificate);
        detail::emit(out, j);
        if (!rep.holds_on_I) exit_code = 1;
    });

    auto* cmd_enum = app.add_subcommand("enumerate", "all solutions within a bound");
    cmd_enum->add_option("equations", eq_file)->required();
    cmd_enum->add_option("--bound", bound_csv)->required();
    cmd_enum->add_option("--alphabet", alphabet);
    cmd_enum->add_option("--jobs", jobs);
    cmd_enum->add_option("--budget", budget);
    cmd_enum->callback([&] {
        Json j = detail::base("enumerate");
        const ParsedSystem ps = parse_equations(detail::slurp(eq_file));
        const SearchBound b(detail::parse_csv_lengths(bound_csv), alphabet, budget);
        const auto sols = enumerate_solutions(ps.system, b, jobs);
        j["bound"] = json_length_type(b.max_lengths);
        j["alphabet_size"] = std::to_string(b.alphabet_size);
        j["count"] = std::to_string(sols.size());
        Json list = Json::array();
        for (const auto& h : sols) list.push_back(json_morphism(h, ps.names));
        j["solutions"] = std::move(list);
        detail::emit(out, j);
    });

    auto* cmd_rank = app.add_subcommand("rank", "combinatorial rank of a morphism");
    cmd_rank->add_option("morphism", morph_file)->required();
    cmd_rank->callback([&] {
        Json j = detail::base("rank");
        const ParsedMorphism pm = parse_morphism(detail::slurp(morph_file));
        j["morphism"] = json_morphism(pm.morphism, pm.names);
        j["rank"] = std::to_string(combinatorial_rank(pm.morphism));
        detail::emit(out, j);
    });

    auto* cmd_indep = app.add_subcommand("independent", "witnesses for independence within a bound");
    cmd_indep->add_option("equations", eq_file)->required();
    cmd_indep->add_option("--bound", bound_csv)->required();
    cmd_indep->add_option("--alphabet", alphabet);
    cmd_indep->add_option("--budget", budget);
    cmd_indep->callback([&] {
        Json j = detail::base("independent");
        const ParsedSystem ps = parse_equations(detail::slurp(eq_file));
        const SearchBound b(detail::parse_csv_lengths(bound_csv), alphabet, budget);
        const auto rep = check_independent(ps.system, b);
        j["bound"] = json_length_type(b.max_lengths);
        Json eqs = Json::array();
        for (std::size_t i = 0; i < rep.per_equation.size(); ++i) {
            Json o;
            o["equation"] = detail::json_equation(ps.system.equations[i], ps.names);
            o["witnessed"] = rep.per_equation[i].witnessed;
            if (rep.per_equation[i].witness)
                o["witness"] = json_morphism(*rep.per_equation[i].witness, ps.names);
            eqs.push_back(std::move(o));
        }
        j["equations"] = std::move(eqs);
        j["independent_at_bound"] = rep.independent_at_bound;
        detail::emit(out, j);
        if (!rep.independent_at_bound) exit_code = 1;
    });

    auto* cmd_chain = app.add_subcommand("chain", "witnesses for a chain within a bound");
    cmd_chain->add_option("equations", eq_file)->required();
    cmd_chain->add_option("--bound", bound_csv)->required();
    cmd_chain->add_option("--alphabet", alphabet);
    cmd_chain->add_option("--budget", budget);
    cmd_chain->add_option("--rank", rank_filter, "require witnesses of this combinatorial rank");
    cmd_chain->callback([&] {
        Json j = detail::base("chain");
        const ParsedSystem ps = parse_equations(detail::slurp(eq_file));
        const SearchBound b(detail::parse_csv_lengths(bound_csv), alphabet, budget);
        std::optional<std::size_t> rk;
        if (rank_filter) rk = static_cast<std::size_t>(*rank_filter);
        const auto rep = check_chain(ps.system, b, rk);
        j["bound"] = json_length_type(b.max_lengths);
        if (rk) j["rank_filter"] = std::to_string(*rk);
        Json pos = Json::array();
        for (std::size_t i = 0; i < rep.positions.size(); ++i) {
            Json o;
            o["equation"] = detail::json_equation(ps.system.equations[i], ps.names);
            o["witnessed"] = rep.positions[i].witnessed;
            if (rep.positions[i].witness) o["witness"] = json_morphism(*rep.positions[i].witness, ps.names);
            if (rep.positions[i].witness_rank) o["witness_rank"] = std::to_string(*rep.positions[i].witness_rank);
            pos.push_back(std::move(o));
        }
        j["positions"] = std::move(pos);
        j["chain_at_bound"] = rep.chain_at_bound;
        detail::emit(out, j);
        if (!rep.chain_at_bound) exit_code = 1;
    });

    // ---- dispatch --------------------------------------------------------
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        detail::emit(out, Json{{"schema", json_schema}, {"error", {{"type", "parse"}, {"message", e.what()}}}});
        return 2;
    } catch (const budget_error& e) {
        detail::emit(out, Json{{"schema", json_schema}, {"error", {{"type", "budget-exceeded"}, {"message", e.what()}}}});
        return 3;
    } catch (const not_a_solution_error& e) {
        detail::emit(out, Json{{"schema", json_schema}, {"error", {{"type", "not-a-solution"}, {"message", e.what()}}}});
        return 1;
    } catch (const hypothesis_error& e) {
        detail::emit(out, Json{{"schema", json_schema}, {"error", {{"type", "hypothesis-not-met"}, {"message", e.what()}}}});
        return 1;
    } catch (const equations_equivalent_error& e) {
        detail::emit(out, Json{{"schema", json_schema}, {"error", {{"type", "equations-equivalent"}, {"message", e.what()}}}});
        return 1;
    } catch (const error& e) {
        detail::emit(out, Json{{"schema", json_schema}, {"error", {{"type", "invalid-input"}, {"message", e.what()}}}});
        return 2;
    }
    return exit_code;
}

} // namespace weq::cli
