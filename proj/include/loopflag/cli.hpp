#pragma once

#include "loopflag/affine.hpp"
#include "loopflag/autgrp.hpp"
#include "loopflag/degcalc.hpp"
#include "loopflag/laurent.hpp"
#include "loopflag/monad.hpp"
#include "loopflag/rootsys.hpp"
#include "loopflag/sheafseq.hpp"
#include "loopflag/weyl.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace loopflag::cli {

using nlohmann::json;

/// Structured outcome of one invocation: echoed inputs, payload, and an
/// ok/error status mapped onto the process exit code (0 ok, 1 domain error,
/// 2 usage error).
struct CommandResult {
    std::string command;
    json inputs = json::object();
    json payload = json::object();
    int exit_code = 0;
    std::string error;

    json to_json() const {
        json doc;
        doc["command"] = command;
        doc["inputs"] = inputs;
        doc["payload"] = payload;
        doc["status"] = (exit_code == 0) ? "ok" : "error";
        if (exit_code != 0) doc["error"] = error;
        return doc;
    }
};

namespace detail {

inline void render_value(std::ostream& os, const std::string& key, const json& v,
                         int indent) {
    std::string pad(std::size_t(indent) * 2, ' ');
    if (v.is_object()) {
        os << pad << key << ":\n";
        for (const auto& [k, sub] : v.items()) render_value(os, k, sub, indent + 1);
    } else if (v.is_array()) {
        bool scalars = std::all_of(v.begin(), v.end(),
                                   [](const json& e) { return !e.is_structured(); });
        if (scalars) {
            os << pad << key << ": ";
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) os << ",";
                if (v[i].is_string())
                    os << v[i].get<std::string>();
                else
                    os << v[i].dump();
            }
            os << "\n";
        } else {
            os << pad << key << ":\n";
            for (std::size_t i = 0; i < v.size(); ++i)
                render_value(os, "[" + std::to_string(i) + "]", v[i], indent + 1);
        }
    } else if (v.is_string()) {
        os << pad << key << ": " << v.get<std::string>() << "\n";
    } else {
        os << pad << key << ": " << v.dump() << "\n";
    }
}

inline std::string root_name(const RootCoeffs& r) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) {
        long long c = r[i];
        if (c == 0) continue;
        if (!s.empty()) s += (c > 0) ? "+" : "-";
        else if (c < 0) s += "-";
        long long a = c > 0 ? c : -c;
        if (a != 1) s += std::to_string(a) + "*";
        s += "alpha_" + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
}

inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

inline std::vector<long long> parse_int_list(const std::string& s) {
    std::vector<long long> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument("could not parse '" + tok +
                                        "' in integer list '" + s + "'");
        }
    }
    return out;
}

inline Crossing crossing_from_list(int rank, const std::string& list) {
    std::vector<int> nodes;
    for (long long v : parse_int_list(list)) nodes.push_back(static_cast<int>(v));
    return Crossing::of_nodes(rank, nodes);
}

inline SheafFamily sheaf_family_from_string(const std::string& s) {
    if (s == "gl" || s == "sl") return SheafFamily::GlSl;
    if (s == "so_even") return SheafFamily::SoEven;
    if (s == "so_odd") return SheafFamily::SoOdd;
    if (s == "sp") return SheafFamily::Sp;
    throw std::invalid_argument("unknown sheaf family '" + s +
                                "' (expected gl, so_even, so_odd, sp)");
}

inline std::string label_name(const SheafLabel& l) {
    std::string s = std::to_string(l.j);
    if (l.tag > 0) s += "+";
    if (l.tag < 0) s += "-";
    return s;
}

inline json degree_list(const std::vector<long long>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace detail

inline std::string render_text(const CommandResult& r) {
    std::ostringstream os;
    os << "command: " << r.command << "\n";
    if (r.exit_code != 0) {
        os << "status: error\nerror: " << r.error << "\n";
        return os.str();
    }
    for (const auto& [k, v] : r.payload.items()) detail::render_value(os, k, v, 0);
    return os.str();
}

inline CommandResult run(std::vector<std::string> args) {
    CommandResult result;

    CLI::App app{"loopflag: exact structure of loop-group flag manifolds"};
    app.require_subcommand(1);

    std::string family_str = "A";
    int rank = 1;
    std::string cross_list;
    long long max_length = 10;
    int max_rank = 8;
    bool json_out = false;
    app.add_flag("--json", json_out, "emit one JSON document instead of text");

    auto add_system_opts = [&](CLI::App* sub, bool with_cross) {
        sub->add_option("--family", family_str, "root system family A/B/C/D")
            ->required();
        sub->add_option("--rank", rank, "root system rank")->required();
        if (with_cross)
            sub->add_option("--cross", cross_list,
                            "comma-separated crossed node indices, e.g. 0,2");
        sub->add_option("--max-rank", max_rank, "resource cap on the rank");
    };

    auto make_system = [&]() {
        if (rank > max_rank)
            throw std::invalid_argument("rank exceeds --max-rank (" +
                                        std::to_string(max_rank) + ")");
        return build_root_system(family_from_letter(family_str.empty() ? '?' : family_str[0]),
                                 rank);
    };

    auto echo_system = [&]() {
        result.inputs["family"] = family_str;
        result.inputs["rank"] = rank;
    };

    // roots
    auto* roots_cmd = app.add_subcommand("roots", "root system summary");
    add_system_opts(roots_cmd, false);
    roots_cmd->callback([&] {
        result.command = "roots";
        echo_system();
        auto rs = make_system();
        result.payload["positive_root_count"] = rs.num_positive_roots();
        result.payload["theta"] = detail::root_name(rs.theta_coeffs());
        json cm = json::array();
        for (long long c : rs.comarks()) cm.push_back(c);
        result.payload["comarks"] = cm;
        result.payload["dual_coxeter"] = rs.dual_coxeter();
        result.payload["killing_theta_norm"] =
            rat_str(rs.killing_pair(rs.theta(), rs.theta()));
    });

    // strange
    auto* strange_cmd = app.add_subcommand("strange", "2<rho,theta>+<theta,theta>");
    add_system_opts(strange_cmd, false);
    strange_cmd->callback([&] {
        result.command = "strange";
        echo_system();
        result.payload["value"] = rat_str(strange_identity(make_system()));
    });

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "classify a crossed diagram");
    add_system_opts(classify_cmd, true);
    classify_cmd->callback([&] {
        result.command = "classify";
        echo_system();
        result.inputs["cross"] = cross_list;
        auto rs = make_system();
        auto p = classify_parabolic(detail::crossing_from_list(rs.rank(), cross_list), rs);
        result.payload["klass"] = parabolic_class_name(p.klass);
        json dc = json::array();
        for (int nidx : p.delta_chi) dc.push_back(nidx);
        result.payload["delta_chi"] = dc;
        json q = json::array();
        for (const auto& r : p.q_chi_roots) q.push_back(detail::root_name(r));
        result.payload["q_chi"] = q;
        result.payload["finite_parabolic_root_count"] = p.finite_parabolic_roots.size();
    });

    // autos
    auto* autos_cmd = app.add_subcommand("autos", "extended diagram automorphisms");
    add_system_opts(autos_cmd, false);
    autos_cmd->callback([&] {
        result.command = "autos";
        echo_system();
        auto rs = make_system();
        auto group = automorphism_group(rs);
        result.payload["order"] = group.size();
        json perms = json::array();
        for (const auto& s : group) perms.push_back(s.perm);
        result.payload["permutations"] = perms;
        if (rs.family() == Family::D && rs.rank() == 4)
            result.payload["note"] =
                "extended diagram of rank 4 is a 4-star: full symmetric group on the arms";
    });

    // standardize
    auto* std_cmd = app.add_subcommand("standardize",
                                       "move a crossing onto node 0 if possible");
    add_system_opts(std_cmd, true);
    std_cmd->callback([&] {
        result.command = "standardize";
        echo_system();
        result.inputs["cross"] = cross_list;
        auto rs = make_system();
        auto c = detail::crossing_from_list(rs.rank(), cross_list);
        auto sigma = standardizable(rs, c);
        result.payload["standardizable"] = sigma.has_value();
        if (sigma) result.payload["witness"] = sigma->perm;
    });

    // weyl-count
    auto* wc_cmd = app.add_subcommand("weyl-count", "affine Weyl elements per length");
    add_system_opts(wc_cmd, false);
    wc_cmd->add_option("--max-length", max_length, "length bound (default 10)");
    wc_cmd->callback([&] {
        result.command = "weyl-count";
        echo_system();
        result.inputs["max_length"] = max_length;
        WeylGroup w(make_system());
        json counts = json::array();
        for (const auto& [len, elems] : w.enumerate_by_length(max_length))
            counts.push_back(elems.size());
        result.payload["counts_by_length"] = counts;
    });

    // hasse
    auto* hasse_cmd = app.add_subcommand("hasse", "minimal coset representatives");
    add_system_opts(hasse_cmd, true);
    hasse_cmd->add_option("--max-length", max_length, "length bound (default 10)");
    hasse_cmd->callback([&] {
        result.command = "hasse";
        echo_system();
        result.inputs["cross"] = cross_list;
        result.inputs["max_length"] = max_length;
        WeylGroup w(make_system());
        auto c = detail::crossing_from_list(w.rank(), cross_list);
        auto hasse = w.hasse_elements(c, max_length);
        std::map<long long, long long> per_len;
        for (const auto& elt : hasse) per_len[w.length(elt)]++;
        json counts = json::array();
        for (long long l = 0; l <= max_length; ++l)
            counts.push_back(per_len.count(l) ? per_len[l] : 0);
        result.payload["counts_by_length"] = counts;
        result.payload["total"] = hasse.size();
    });

    // degree
    std::string k_list;
    auto* degree_cmd = app.add_subcommand("degree", "formal degree of a multi-degree");
    add_system_opts(degree_cmd, true);
    degree_cmd->add_option("--k", k_list, "degrees aligned with the crossed nodes")
        ->required();
    degree_cmd->callback([&] {
        result.command = "degree";
        echo_system();
        result.inputs["cross"] = cross_list;
        result.inputs["k"] = k_list;
        auto rs = make_system();
        auto c = detail::crossing_from_list(rs.rank(), cross_list);
        auto k = MultiDegree::for_crossing(c, detail::parse_int_list(k_list));
        result.payload["d"] = formal_degree(rs, c, k);
    });

    // instanton-dim
    long long charge = 0;
    auto* inst_cmd = app.add_subcommand("instanton-dim", "framed moduli dimension");
    add_system_opts(inst_cmd, false);
    inst_cmd->add_option("--k", charge, "charge")->required();
    inst_cmd->callback([&] {
        result.command = "instanton-dim";
        echo_system();
        result.inputs["k"] = charge;
        result.payload["dimension"] = instanton_dimension(make_system(), charge);
    });

    // charges
    std::string j_list;
    auto* charges_cmd = app.add_subcommand("charges", "degrees from charge and flag degrees");
    charges_cmd->add_option("--k", charge, "second Chern class")->required();
    charges_cmd->add_option("--j", j_list, "flag quotient degrees j_1,...,j_{n-1}")
        ->required();
    charges_cmd->callback([&] {
        result.command = "charges";
        result.inputs["k"] = charge;
        result.inputs["j"] = j_list;
        result.payload["degrees"] =
            detail::degree_list(charges(charge, detail::parse_int_list(j_list)));
    });

    // hecke-degrees
    int hd_n = 2;
    auto* hd_cmd = app.add_subcommand("hecke-degrees", "cyclic degree permutation");
    hd_cmd->add_option("--n", hd_n, "number of degrees")->required();
    hd_cmd->add_option("--k", k_list, "degree vector")->required();
    hd_cmd->callback([&] {
        result.command = "hecke-degrees";
        result.inputs["n"] = hd_n;
        result.inputs["k"] = k_list;
        result.payload["degrees"] =
            detail::degree_list(hecke_degree_action(hd_n, detail::parse_int_list(k_list)));
    });

    // sheafseq
    std::string sheaf_family_str = "gl";
    int sheaf_n = 2;
    auto* seq_cmd = app.add_subcommand("sheafseq", "surviving labels and quotients");
    seq_cmd->add_option("--sheaf-family", sheaf_family_str, "gl, so_even, so_odd, sp")
        ->required();
    seq_cmd->add_option("--n", sheaf_n, "family parameter n")->required();
    seq_cmd->add_option("--cross", cross_list, "crossed node indices");
    seq_cmd->callback([&] {
        result.command = "sheafseq";
        result.inputs["sheaf_family"] = sheaf_family_str;
        result.inputs["n"] = sheaf_n;
        result.inputs["cross"] = cross_list;
        auto fam = detail::sheaf_family_from_string(sheaf_family_str);
        int crossing_rank = (fam == SheafFamily::GlSl) ? sheaf_n - 1 : sheaf_n;
        auto c = detail::crossing_from_list(crossing_rank, cross_list);
        auto spec = sequence_spec_from_crossing(fam, sheaf_n, c);
        json surv = json::array();
        for (const auto& l : spec.surviving) surv.push_back(detail::label_name(l));
        result.payload["surviving"] = surv;
        if (fam == SheafFamily::GlSl) {
            json sizes = json::array();
            for (long long s : quotient_sizes(spec)) sizes.push_back(s);
            result.payload["quotient_sizes"] = sizes;
        }
    });

    // hecke-shift
    long long idx_i = 0;
    int idx_j = 1, idx_tag = 0;
    auto* shift_cmd = app.add_subcommand("hecke-shift", "index action of the Hecke transform");
    shift_cmd->add_option("--sheaf-family", sheaf_family_str, "gl, so_even, so_odd, sp")
        ->required();
    shift_cmd->add_option("--n", sheaf_n, "family parameter n")->required();
    shift_cmd->add_option("--i", idx_i, "twist index")->required();
    shift_cmd->add_option("--j", idx_j, "label position")->required();
    shift_cmd->add_option("--tag", idx_tag, "+1/-1 decoration (even orthogonal)");
    shift_cmd->callback([&] {
        result.command = "hecke-shift";
        result.inputs["sheaf_family"] = sheaf_family_str;
        result.inputs["n"] = sheaf_n;
        result.inputs["i"] = idx_i;
        result.inputs["j"] = idx_j;
        result.inputs["tag"] = idx_tag;
        auto fam = detail::sheaf_family_from_string(sheaf_family_str);
        auto out = hecke_index_shift(fam, sheaf_n, SheafIndex{idx_i, {idx_j, idx_tag}});
        result.payload["i"] = out.i;
        result.payload["j"] = out.label.j;
        result.payload["label"] = detail::label_name(out.label);
    });

    // flip-demo
    auto* flip_cmd = app.add_subcommand(
        "flip-demo", "sl(2) flip: Borel is fixed, the parabolic pair swaps");
    flip_cmd->callback([&] {
        result.command = "flip-demo";
        auto rs = build_root_system(Family::A, 1);
        auto borel = Crossing::all(1);
        auto p1 = Crossing::of_nodes(1, {0});
        auto p2 = Crossing::of_nodes(1, {1});

        auto basis_elt = [&](int r, int c, long long level, const char* name) {
            LaurentMatrix g = LaurentMatrix::zero(2, 1);
            if (r == c) {
                g.add_z_term(0, 0, level, 1);
                g.add_z_term(1, 1, level, -1);
            } else {
                g.add_z_term(r, c, level, 1);
            }
            return std::make_pair(g, std::string(name));
        };

        bool borel_fixed = true;
        bool p1_into_p2 = true;
        json images = json::array();
        for (long long level = 0; level <= 2; ++level) {
            std::vector<std::pair<LaurentMatrix, std::string>> basis = {
                basis_elt(0, 1, level, "E12"),
                basis_elt(1, 0, level, "E21"),
                basis_elt(0, 0, level, "H"),
            };
            for (const auto& [g, name] : basis) {
                auto img = conjugate_outer(g, OuterKind::FlipSl2);
                bool in_p2 = parabolic_membership(img, rs, p2);
                if (parabolic_membership(g, rs, borel))
                    borel_fixed = borel_fixed && parabolic_membership(img, rs, borel);
                if (parabolic_membership(g, rs, p1)) p1_into_p2 = p1_into_p2 && in_p2;
                json rec;
                rec["basis"] = name + " z^" + std::to_string(level);
                auto [lo, hi] = img.z_level_range();
                rec["image_levels"] = std::vector<long long>{lo, hi};
                rec["in_exotic"] = in_p2;
                images.push_back(rec);
            }
        }
        result.payload["borel_fixed"] = borel_fixed;
        result.payload["p1_into_p2"] = p1_into_p2;
        result.payload["images"] = images;
    });

    // window
    int win_size = 2;
    long long win_lo = 0, win_hi = 1;
    std::vector<std::string> terms;
    auto* win_cmd = app.add_subcommand("window", "infinite-matrix window of a loop");
    win_cmd->add_option("--size", win_size, "matrix size")->required();
    win_cmd->add_option("--lo", win_lo, "window start");
    win_cmd->add_option("--hi", win_hi, "window end");
    win_cmd->add_option("--term", terms, "entry as row,col,level,value (repeatable)")
        ->required();
    win_cmd->callback([&] {
        result.command = "window";
        result.inputs["size"] = win_size;
        result.inputs["lo"] = win_lo;
        result.inputs["hi"] = win_hi;
        result.inputs["terms"] = terms;
        LaurentMatrix g = LaurentMatrix::zero(win_size, 1);
        for (const auto& t : terms) {
            std::stringstream ss(t);
            std::string tok;
            std::vector<std::string> parts;
            while (std::getline(ss, tok, ',')) parts.push_back(tok);
            if (parts.size() != 4)
                throw std::invalid_argument("--term expects row,col,level,value");
            g.add_z_term(std::stoi(parts[0]), std::stoi(parts[1]), std::stoll(parts[2]),
                         detail::parse_rat(parts[3]));
        }
        auto w = window(g, win_lo, win_hi);
        json blocks = json::object();
        for (const auto& [key, block] : w.blocks) {
            json rows = json::array();
            for (const auto& row : block) {
                json r = json::array();
                for (const auto& v : row) r.push_back(rat_str(v));
                rows.push_back(r);
            }
            blocks["(" + std::to_string(key.first) + "," + std::to_string(key.second) +
                   ")"] = rows;
        }
        result.payload["block_size"] = win_size;
        result.payload["blocks"] = blocks;
    });

    // monad
    int mk = 1, mn = 2;
    std::uint64_t seed = 1;
    bool check_order = false;
    auto* monad_cmd = app.add_subcommand("monad", "random monad data and its Hecke orbit");
    monad_cmd->add_option("--k", mk, "charge (matrix size k)")->required();
    monad_cmd->add_option("--n", mn, "rank n")->required();
    monad_cmd->add_option("--seed", seed, "deterministic seed");
    monad_cmd->add_flag("--check-order", check_order,
                        "verify the n-fold iterate equals the A-conjugate");
    monad_cmd->callback([&] {
        result.command = "monad";
        result.inputs["k"] = mk;
        result.inputs["n"] = mn;
        result.inputs["seed"] = seed;
        auto m = random_monad(mk, mn, seed);
        result.payload["valid"] = validate(m);
        result.payload["hecke_valid"] = validate(hecke_monad(m));
        json a = json::array();
        for (const auto& row : m.A) {
            json r = json::array();
            for (const auto& v : row) r.push_back(rat_str(v));
            a.push_back(r);
        }
        result.payload["A"] = a;
        if (check_order) result.payload["order_ok"] = hecke_order_check(m);
    });

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        result.command = "help";
        result.payload["usage"] = app.help();
        result.exit_code = 0;
        return result;
    } catch (const CLI::ParseError& e) {
        result.exit_code = 2;
        result.error = std::string(e.what()) + "\n" + app.help();
        return result;
    } catch (const std::exception& e) {
        result.exit_code = 1;
        result.error = e.what();
        return result;
    }
    return result;
}

}  // namespace loopflag::cli
