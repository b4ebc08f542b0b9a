#include "linopt/cli.hpp"

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "linopt/complexity.hpp"
#include "linopt/estimator.hpp"
#include "linopt/json_io.hpp"
#include "linopt/majorization.hpp"
#include "linopt/permanent.hpp"

namespace linopt::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr double kUnitarityWarnThreshold = 1e-8;

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string fmt_complex(cplx z) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
    return buf;
}

// One command's result in all three output shapes. Handlers fill the JSON
// payload plus formatted text fields; tabular commands override the CSV view.
struct Payload {
    json j = json::object();
    std::vector<std::pair<std::string, std::string>> text;
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
    std::string raw; // verbatim output (DOT), used for every format when set

    void add_complex(const std::string& key, cplx z) {
        j[key] = {z.real(), z.imag()};
        text.emplace_back(key, fmt_complex(z));
    }
    void add_double(const std::string& key, double v) {
        j[key] = v;
        text.emplace_back(key, fmt_double(v));
    }
    void add_int(const std::string& key, std::int64_t v) {
        j[key] = v;
        text.emplace_back(key, std::to_string(v));
    }
    void add_uint(const std::string& key, std::uint64_t v) {
        j[key] = v;
        text.emplace_back(key, std::to_string(v));
    }
    void add_string(const std::string& key, const std::string& v) {
        j[key] = v;
        text.emplace_back(key, v);
    }
    void add_bigint(const std::string& key, const Bigint& v) {
        j[key] = v.str();
        text.emplace_back(key, v.str());
    }
    void add_int_array(const std::string& key, const std::vector<int>& values,
                       char joiner = ',') {
        j[key] = values;
        std::string s;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) s += joiner;
            s += std::to_string(values[i]);
        }
        text.emplace_back(key, s);
    }
};

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

void emit(const Payload& p, const std::string& format, std::ostream& out) {
    if (!p.raw.empty()) {
        out << p.raw;
        return;
    }
    if (format == "json") {
        out << p.j.dump() << '\n';
    } else if (format == "text") {
        for (const auto& [key, value] : p.text) out << key << ": " << value << '\n';
    } else { // csv
        if (!p.csv_header.empty()) {
            for (std::size_t i = 0; i < p.csv_header.size(); ++i) {
                if (i) out << ',';
                out << csv_escape(p.csv_header[i]);
            }
            out << '\n';
            for (const auto& row : p.csv_rows) {
                for (std::size_t i = 0; i < row.size(); ++i) {
                    if (i) out << ',';
                    out << csv_escape(row[i]);
                }
                out << '\n';
            }
        } else {
            // Single-record commands: field names as header, one data row.
            for (std::size_t i = 0; i < p.text.size(); ++i) {
                if (i) out << ',';
                out << csv_escape(p.text[i].first);
            }
            out << '\n';
            for (std::size_t i = 0; i < p.text.size(); ++i) {
                if (i) out << ',';
                out << csv_escape(p.text[i].second);
            }
            out << '\n';
        }
    }
}

Algorithm parse_algorithm(const std::string& name) {
    static const std::map<std::string, Algorithm> table = {
        {"naive", Algorithm::Naive},
        {"ryser", Algorithm::Ryser},
        {"glynn", Algorithm::Glynn},
        {"repeated-cols", Algorithm::RepeatedCols},
        {"roots-of-unity", Algorithm::RootsOfUnity},
        {"kan-series", Algorithm::KanSeries},
    };
    auto it = table.find(name);
    if (it == table.end()) raise(ErrorCode::ParseError, "unknown algorithm '" + name + "'");
    return it->second;
}

void warn_if_not_unitary(const ComplexMatrix& u, std::ostream& err) {
    double defect = unitarity_defect(u);
    if (defect > kUnitarityWarnThreshold) {
        err << "warning: matrix deviates from unitarity (defect " << fmt_double(defect)
            << "); amplitudes are not normalized transition amplitudes\n";
    }
}

void estimate_fields(Payload& p, const EstimateResult& r) {
    p.add_complex("estimate", r.estimate);
    p.add_uint("samples", r.samples);
    p.add_uint("seed", r.seed);
    p.add_double("epsilon", r.epsilon);
    p.add_double("bound", r.bound);
}

void runtime_fields(Payload& p, const RuntimeEstimate& est) {
    p.add_bigint("t_min", est.t_min);
    p.add_string("orientation",
                 est.orientation == RuntimeEstimate::Orientation::Input ? "n" : "m");
    p.add_bigint("prod_n", est.prod_n);
    p.add_bigint("prod_m", est.prod_m);
    p.add_int("alpha_n", est.alpha_n);
    p.add_int("alpha_m", est.alpha_m);
}

json runtime_json(const RuntimeEstimate& est) {
    Payload p;
    runtime_fields(p, est);
    return p.j;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Linear-optics scattering amplitudes, matrix permanents and majorization analytics"};
    app.name("linopt");
    app.require_subcommand(1);

    std::string format = "json";
    unsigned threads = 1;
    std::uint64_t seed = 0;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--threads", threads, "Worker threads for the dense exponential sums")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "Seed for randomized commands");

    std::string input_path, n_str, m_str, algo_str, method = "exact";
    std::vector<std::string> compare_strs;
    int lattice_n = 0;
    bool dot = false;
    std::uint64_t samples = 0;
    double epsilon = 0.0;

    CLI::App* perm = app.add_subcommand("perm", "Matrix permanent");
    perm->add_option("--input", input_path, "Matrix JSON file")->required();
    perm->add_option("--algo", algo_str, "Algorithm")->default_val("ryser");
    perm->add_option("--n", n_str, "Input distribution (comma separated)");
    perm->add_option("--m", m_str, "Output distribution (comma separated)");

    CLI::App* ampl = app.add_subcommand("amplitude", "Scattering amplitude <m|U|n>");
    ampl->add_option("--input", input_path)->required();
    ampl->add_option("--n", n_str)->required();
    ampl->add_option("--m", m_str)->required();
    ampl->add_option("--algo", algo_str)->default_val("roots-of-unity");

    CLI::App* dist = app.add_subcommand("distribution", "All output probabilities for one input");
    dist->add_option("--input", input_path)->required();
    dist->add_option("--n", n_str)->required();

    CLI::App* schur = app.add_subcommand("schur", "Schur-concave report for a distribution");
    schur->add_option("--n", n_str)->required();

    CLI::App* cmp = app.add_subcommand("compare", "Majorization comparison");
    cmp->add_option("--n", n_str)->required();
    cmp->add_option("--m", m_str)->required();

    CLI::App* lattice = app.add_subcommand("lattice", "Dominance lattice of partitions");
    lattice->add_option("--N", lattice_n, "Partition weight")->required();
    lattice->add_flag("--dot", dot, "Emit DOT graph text");

    CLI::App* diff = app.add_subcommand("diff", "Majorization difference (covering moves)");
    diff->add_option("--n", n_str)->required();
    diff->add_option("--m", m_str)->required();

    CLI::App* runtime = app.add_subcommand("runtime", "Structural runtime t_min");
    runtime->add_option("--n", n_str)->required();
    runtime->add_option("--m", m_str)->required();
    runtime->add_option("--compare", compare_strs, "Second pair n2 m2 to compare against")
        ->expected(2);

    CLI::App* estimate = app.add_subcommand("estimate", "Randomized permanent estimate");
    estimate->add_option("--input", input_path)->required();
    estimate->add_option("--n", n_str)->required();
    estimate->add_option("--m", m_str)->required();
    estimate->add_option("--samples", samples)->required()->check(CLI::PositiveNumber);

    CLI::App* bound = app.add_subcommand("bound", "Additive error bound");
    bound->add_option("--n", n_str)->required();
    bound->add_option("--m", m_str)->required();
    bound->add_option("--epsilon", epsilon)->required();
    bound->add_option("--method", method)->check(CLI::IsMember({"exact", "entropy", "stirling"}));

    app.add_subcommand("figure4", "Q and t_min/6 along the fixed N=6 chain");

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    std::vector<const char*> argv;
    argv.push_back("linopt");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    // Distribution strings are part of the flag grammar: malformed ones are
    // usage errors, not domain errors.
    std::optional<PhotonDistribution> n_dist, m_dist, n2_dist, m2_dist;
    try {
        if (!n_str.empty()) n_dist = parse_distribution(n_str);
        if (!m_str.empty()) m_dist = parse_distribution(m_str);
        if (compare_strs.size() == 2) {
            n2_dist = parse_distribution(compare_strs[0]);
            m2_dist = parse_distribution(compare_strs[1]);
        }
    } catch (const Error& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    PermanentOptions opts{threads};

    try {
        Payload p;
        if (app.got_subcommand(perm)) {
            ComplexMatrix u = load_matrix_file(input_path);
            Algorithm algo = parse_algorithm(algo_str);
            PermanentResult r{};
            switch (algo) {
                case Algorithm::Naive:
                case Algorithm::Ryser:
                case Algorithm::Glynn: {
                    if (n_dist.has_value() != m_dist.has_value()) {
                        err << "usage error: --n and --m must be given together for dense algorithms\n";
                        return 2;
                    }
                    ComplexMatrix target =
                        n_dist ? expand_submatrix(u, *n_dist, *m_dist) : u;
                    if (algo == Algorithm::Naive) r = per_naive(target);
                    if (algo == Algorithm::Ryser) r = per_ryser(target, opts);
                    if (algo == Algorithm::Glynn) r = per_glynn(target, opts);
                    break;
                }
                case Algorithm::RepeatedCols:
                    if (!n_dist || m_dist) {
                        err << "usage error: repeated-cols takes --n only\n";
                        return 2;
                    }
                    r = per_repeated_cols(u, *n_dist);
                    break;
                case Algorithm::RootsOfUnity:
                case Algorithm::KanSeries: {
                    PhotonDistribution n =
                        n_dist ? *n_dist : PhotonDistribution::single_photons(u.dim());
                    PhotonDistribution m =
                        m_dist ? *m_dist : PhotonDistribution::single_photons(u.dim());
                    r = algo == Algorithm::RootsOfUnity ? per_roots_of_unity(u, n, m)
                                                        : per_kan_series(u, n, m);
                    break;
                }
            }
            p.add_complex("value", r.value);
            p.add_string("algorithm", to_string(r.algorithm));
            p.add_uint("term_count", r.term_count);
        } else if (app.got_subcommand(ampl)) {
            ComplexMatrix u = load_matrix_file(input_path);
            warn_if_not_unitary(u, err);
            Amplitude a = amplitude(u, *n_dist, *m_dist, parse_algorithm(algo_str), opts);
            p.add_complex("value", a.value);
            p.add_complex("permanent", a.permanent);
            p.add_double("normalization", a.normalization);
        } else if (app.got_subcommand(dist)) {
            ComplexMatrix u = load_matrix_file(input_path);
            warn_if_not_unitary(u, err);
            auto outputs = output_distribution(u, *n_dist);
            double total = 0.0;
            json rows = json::array();
            p.csv_header = {"state", "probability"};
            std::string text_rows;
            for (const auto& [state, prob] : outputs) {
                total += prob;
                rows.push_back(json{{"state", state.occupations()}, {"probability", prob}});
                p.csv_rows.push_back({to_string(state), fmt_double(prob)});
                text_rows += "\n  " + to_string(state) + " -> " + fmt_double(prob);
            }
            p.j["input"] = n_dist->occupations();
            p.j["outputs"] = std::move(rows);
            p.j["total_probability"] = total;
            p.text.emplace_back("input", to_string(*n_dist));
            p.text.emplace_back("outputs", text_rows);
            p.text.emplace_back("total_probability", fmt_double(total));
        } else if (app.got_subcommand(schur)) {
            SchurReport r = schur_report(*n_dist);
            p.add_int_array("partition", r.partition.parts(), '+');
            p.add_int("alpha", r.alpha);
            p.add_bigint("Q", r.Q);
            json xs = json::array();
            std::string xs_text;
            for (std::size_t k = 0; k < r.X.size(); ++k) {
                xs.push_back(r.X[k].str());
                if (k) xs_text += ',';
                xs_text += r.X[k].str();
            }
            p.j["X"] = std::move(xs);
            p.text.emplace_back("X", xs_text);
            p.add_double("v", r.v);
            p.add_double("H", r.H);
            p.add_double("S_B", r.S_B);
            p.add_double("delta_S", r.delta_S);
        } else if (app.got_subcommand(cmp)) {
            MajorizationRelation rel = compare(canonicalize(*n_dist), canonicalize(*m_dist));
            p.add_string("relation", to_string(rel));
        } else if (app.got_subcommand(lattice)) {
            DominanceLattice l = build_lattice(lattice_n);
            if (dot) {
                p.raw = l.to_dot();
            } else {
                json nodes = json::array();
                for (const Partition& node : l.nodes()) nodes.push_back(node.parts());
                json edges = json::array();
                p.csv_header = {"from", "to"};
                for (const auto& [from, to] : l.cover_edges()) {
                    edges.push_back({from, to});
                    p.csv_rows.push_back(
                        {to_string(l.nodes()[from]), to_string(l.nodes()[to])});
                }
                p.j["N"] = lattice_n;
                p.j["nodes"] = std::move(nodes);
                p.j["edges"] = std::move(edges);
                p.text.emplace_back("N", std::to_string(lattice_n));
                p.text.emplace_back("nodes", std::to_string(l.nodes().size()));
                p.text.emplace_back("edges", std::to_string(l.cover_edges().size()));
            }
        } else if (app.got_subcommand(diff)) {
            int steps = majorization_difference(canonicalize(*n_dist), canonicalize(*m_dist));
            p.add_int("difference", steps);
        } else if (app.got_subcommand(runtime)) {
            RuntimeEstimate left = runtime_exact(*n_dist, *m_dist);
            if (n2_dist) {
                RuntimeEstimate right = runtime_exact(*n2_dist, *m2_dist);
                RuntimeRelation rel =
                    runtime_compare(*n_dist, *m_dist, *n2_dist, *m2_dist);
                p.j["left"] = runtime_json(left);
                p.j["right"] = runtime_json(right);
                p.j["relation"] = to_string(rel);
                p.text.emplace_back("left_t_min", left.t_min.str());
                p.text.emplace_back("right_t_min", right.t_min.str());
                p.text.emplace_back("relation", to_string(rel));
            } else {
                runtime_fields(p, left);
            }
        } else if (app.got_subcommand(estimate)) {
            ComplexMatrix u = load_matrix_file(input_path);
            EstimateResult r =
                (n_dist->unbunched() && m_dist->unbunched() &&
                 std::size_t(n_dist->total()) == u.dim())
                    ? gurvits_estimate(u, samples, seed)
                    : generalized_estimate(u, *n_dist, *m_dist, samples, seed);
            estimate_fields(p, r);
        } else if (app.got_subcommand(bound)) {
            double value = 0.0;
            if (method == "exact") value = error_bound(*n_dist, *m_dist, epsilon);
            if (method == "entropy") value = error_bound_entropy(*n_dist, *m_dist, epsilon);
            if (method == "stirling") value = error_bound_stirling(*n_dist, *m_dist, epsilon);
            p.add_double("epsilon", epsilon);
            p.add_string("method", method);
            p.add_double("bound", value);
        } else { // figure4
            std::vector<Figure4Row> rows = figure4_data();
            if (format == "csv") {
                p.raw = figure4_csv(rows);
            } else {
                json arr = json::array();
                for (const Figure4Row& row : rows) {
                    json r;
                    r["index"] = row.index;
                    r["partition"] = row.partition.parts();
                    r["Q"] = row.Q.str();
                    r["Tmin_over_6"] = row.t_min_over_6.str();
                    arr.push_back(std::move(r));
                    p.text.emplace_back(std::to_string(row.index),
                                        to_string(row.partition) + " Q=" + row.Q.str() +
                                            " Tmin/6=" + row.t_min_over_6.str());
                }
                p.j = std::move(arr);
            }
        }
        emit(p, format, out);
        return 0;
    } catch (const Error& e) {
        if (format == "json") {
            json error_obj{{"error", to_string(e.code())}, {"message", e.what()}};
            out << error_obj.dump() << '\n';
        }
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace linopt::cli
