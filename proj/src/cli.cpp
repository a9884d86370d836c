#include "beatty/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "beatty/beatty.hpp"
#include "beatty/conjectures.hpp"
#include "beatty/covering.hpp"
#include "beatty/figures.hpp"
#include "beatty/identities.hpp"
#include "beatty/search.hpp"

namespace beatty {

namespace {

using nlohmann::json;

struct Options {
    std::string out_path;
    std::string format = "csv";
    unsigned threads = 1;

    Int p = 0, q = 0, r = 0, delta = 0, gamma = 0;
    std::optional<Int> j, t;
    bool exact = false, numeric = false, figure = false;

    std::string instance_path;

    Int m_max = 5, q_max = 33;

    std::string which = "rf";
    Int q_min = 2, scan_q_max = 20, n_max = 3, n = 3;

    int figure_id = 0;
};

std::string g12(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

// "1 - w + 2w^3" style rendering of the canonical representative.
std::string poly_string(const CycloElt& e) {
    std::ostringstream s;
    bool first = true;
    const auto& c = e.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        const Int mag = c[i] < 0 ? -c[i] : c[i];
        if (first) s << (c[i] < 0 ? "-" : "");
        else s << (c[i] < 0 ? " - " : " + ");
        if (i == 0 || mag != 1) s << mag;
        if (i >= 1) s << "w";
        if (i >= 2) s << "^" << i;
        first = false;
    }
    return first ? "0" : s.str();
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

// Writes to --out when given, else to the console stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& console) : console_(console) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : console_; }

private:
    std::ofstream file_;
    std::ostream& console_;
};

int cmd_transform(const Options& o, std::ostream& out) {
    const BeattyParams b(o.p, o.q, o.r);
    const bool numeric = o.numeric || o.figure;
    std::vector<Int> js;
    if (o.j) js.push_back(*o.j);
    else
        for (Int j = o.figure ? 1 : 0; j < b.q(); ++j) js.push_back(j);

    json rows = json::array();
    Sink sink(o.out_path, out);
    auto& s = sink.stream();
    const bool csv = o.format == "csv";
    if (csv) s << (numeric ? "j,re,im,magnitude\n" : "j,value,closed_form\n");
    for (Int j : js) {
        const CycloElt d = dft_direct(b, j);
        if (numeric) {
            const auto z = d.embed_complex();
            if (csv) s << j << ',' << g12(z.real()) << ',' << g12(z.imag()) << ',' << g12(std::abs(z)) << '\n';
            else rows.push_back({{"j", j}, {"re", z.real()}, {"im", z.imag()}, {"magnitude", std::abs(z)}});
        } else {
            // j = 0 counts the period: the closed form does not apply
            const std::string status = mod(j, b.q()) == 0 ? "n/a" : (closed_form_matches(b, j) ? "verified" : "MISMATCH");
            if (csv) s << j << ',' << csv_quote(poly_string(d)) << ',' << status << '\n';
            else rows.push_back({{"j", j}, {"coefficients", d.coeffs()}, {"value", poly_string(d)}, {"closed_form", status}});
        }
    }
    if (!csv) s << json{{"p", b.p()}, {"q", b.q()}, {"r", b.r()}, {"rows", rows}}.dump(2) << '\n';
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    std::ifstream in(o.instance_path);
    if (!in) throw std::invalid_argument("cannot read " + o.instance_path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed instance JSON: ") + e.what());
    }
    const CoveringInstance inst = instance_from_json(doc);
    const CoverVerdict v = is_perfect_cover(inst);
    const bool agrees = covering_criterion(inst).is_perfect == v.is_perfect;
    Sink sink(o.out_path, out);
    auto& s = sink.stream();
    if (o.format == "csv") {
        s << "is_perfect,multiplicity,criterion_agrees\n"
          << (v.is_perfect ? "true" : "false") << ',' << (v.multiplicity ? std::to_string(*v.multiplicity) : "")
          << ',' << (agrees ? "true" : "false") << '\n';
    } else {
        json j = v;
        j["criterion_agrees"] = agrees;
        s << j.dump(2) << '\n';
    }
    if (!agrees) throw std::logic_error("profile and spectral criterion disagree");
    return v.is_perfect ? kExitOk : kExitFalse;
}

int cmd_construct(const Options& o, std::ostream& out) {
    const CoveringInstance inst = construct_cfc(o.q, o.delta, o.gamma);
    const CoverVerdict v = is_perfect_cover(inst);
    const Int predicted = predicted_multiplicity(o.q, o.delta);
    Sink sink(o.out_path, out);
    auto& s = sink.stream();
    if (o.format == "csv") {
        s << "k,p,r\n";
        Int k = 1;
        for (const auto& b : inst.members()) s << k++ << ',' << b.p() << ',' << b.r() << '\n';
        s << "# measured_multiplicity=" << (v.multiplicity ? std::to_string(*v.multiplicity) : "none")
          << " predicted_multiplicity=" << predicted << '\n';
    } else {
        s << json{{"instance", inst},
                  {"measured_multiplicity", v.multiplicity ? json(*v.multiplicity) : json()},
                  {"predicted_multiplicity", predicted}}
                 .dump(2)
          << '\n';
    }
    return v.is_perfect && v.multiplicity == predicted ? kExitOk : kExitFalse;
}

int cmd_search(const Options& o, std::ostream& out) {
    const SearchReport rep = run_full_search(o.m_max, o.q_max, o.threads);
    Sink sink(o.out_path, out);
    auto& s = sink.stream();
    if (o.format == "csv") {
        s << "cover,q,p,r\n";
        std::size_t idx = 0;
        for (const auto& c : rep.perfect_covers) {
            for (const auto& b : c.members()) s << idx << ',' << c.q() << ',' << b.p() << ',' << b.r() << '\n';
            ++idx;
        }
    } else {
        s << json(rep).dump(2) << '\n';
    }
    return kExitOk;
}

int cmd_identities(const Options& o, std::ostream& out) {
    std::vector<IdentityRecord> recs{csc_identity_record(o.q)};
    std::optional<SSum> s_val;
    std::optional<Int> cover_c;
    if (o.t) {
        recs.push_back(sine_ratio_record(o.q, *o.t));
        recs.push_back(cosine_ratio_record(o.q, *o.t));
        s_val = s_sum(o.q, *o.t);
        cover_c = s_sum_cover_multiplicity(o.q, *o.t);
    }
    Sink sink(o.out_path, out);
    auto& s = sink.stream();
    bool all_ok = true;
    for (const auto& r : recs) all_ok = all_ok && r.verified;
    if (o.format == "csv") {
        s << "kind,q,t,verified,rhs,latex\n";
        for (const auto& r : recs)
            s << r.kind << ',' << r.q << ',' << (r.t ? std::to_string(*r.t) : "") << ','
              << (r.verified ? "true" : "false") << ',' << g12(r.rhs) << ',' << csv_quote(r.latex) << '\n';
        if (s_val)
            s << "# S(" << o.q << "," << *o.t << ") = " << poly_string(s_val->exact)
              << (cover_c ? " (cosets cover Z_q\\{0} " + std::to_string(*cover_c) + " times)" : "") << '\n';
    } else {
        json doc{{"identities", recs}};
        if (s_val) {
            doc["s_sum"] = {{"q", o.q},
                            {"t", *o.t},
                            {"coefficients", s_val->exact.coeffs()},
                            {"re", s_val->value.real()},
                            {"im", s_val->value.imag()},
                            {"cover_multiplicity", cover_c ? json(*cover_c) : json()}};
        }
        s << doc.dump(2) << '\n';
    }
    return all_ok ? kExitOk : kExitFalse;
}

int cmd_conjectures(const Options& o, std::ostream& out) {
    ScanReport rep;
    if (o.which == "strong-martin") rep = run_strong_martin_scan(o.n, o.q_min, o.scan_q_max);
    else rep = run_rf_scan(o.q_min, o.scan_q_max, o.n_max, o.which == "rf-strong", o.threads);
    Sink sink(o.out_path, out);
    auto& s = sink.stream();
    if (o.format == "csv") {
        s << "kind,q_min,q_max,n,scanned,hits,violations\n"
          << rep.kind << ',' << rep.q_min << ',' << rep.q_max << ',' << rep.n_max << ',' << rep.scanned << ','
          << (rep.kind == "strong-martin" ? rep.martin_hits.size() : rep.rf_hits.size()) << ','
          << rep.violation_count << '\n';
    } else {
        s << json(rep).dump(2) << '\n';
    }
    return rep.violation_count == 0 ? kExitOk : kExitFalse;
}

int cmd_figures(const Options& o, std::ostream& out) {
    const FigureTable table = figure_data(o.figure_id);
    const bool csv = o.format == "csv";
    auto emit = [&](std::ostream& s) {
        if (csv) write_csv(s, table);
        else s << json(table).dump() << '\n';
    };
    if (o.out_path.empty()) {
        emit(out);
        return kExitOk;
    }
    const std::filesystem::path dir(o.out_path);
    std::filesystem::create_directories(dir);
    const auto file = dir / ("fig" + std::to_string(o.figure_id) + (csv ? ".csv" : ".json"));
    std::ofstream f(file);
    if (!f) throw std::runtime_error("cannot open output file " + file.string());
    emit(f);
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Rational Beatty sets modulo q: transforms, perfect covers, identities"};
    app.name("beatty_cli");
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--out", o.out_path, "Output file (directory for figures)");
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1u, 1024u));

    auto* transform = app.add_subcommand("transform", "Fourier coefficients of B^q_{p,r}");
    transform->add_option("p", o.p)->required();
    transform->add_option("q", o.q)->required();
    transform->add_option("r", o.r)->required();
    transform->add_option("j", o.j);
    auto* f_exact = transform->add_flag("--exact", o.exact, "Exact element of Z[w] with closed-form check (default)");
    auto* f_numeric = transform->add_flag("--numeric", o.numeric, "Complex values");
    auto* f_figure = transform->add_flag("--figure", o.figure, "Complex values for j = 1..q-1");
    f_exact->excludes(f_numeric)->excludes(f_figure);
    f_numeric->excludes(f_figure);

    auto* verify = app.add_subcommand("verify", "Decide whether an instance is a perfect cover");
    verify->add_option("instance", o.instance_path, "Instance JSON")->required();

    auto* construct = app.add_subcommand("construct", "Build the cover p_k = delta 2^{m-k}");
    construct->add_option("q", o.q)->required();
    construct->add_option("delta", o.delta)->required();
    construct->add_option("gamma", o.gamma)->required();

    auto* search = app.add_subcommand("search", "Finite search for perfect covers with distinct densities");
    search->add_option("--m-max", o.m_max)->check(CLI::Range(Int{3}, Int{8}));
    search->add_option("--q-max", o.q_max)->check(CLI::Range(Int{4}, Int{200}));

    auto* identities = app.add_subcommand("identities", "Cosecant and ratio-sum identities for odd q");
    identities->add_option("q", o.q)->required();
    identities->add_option("t", o.t);

    auto* conj = app.add_subcommand("conjectures", "Desk-scale conjecture scans");
    conj->add_option("--which", o.which)->check(CLI::IsMember({"rf", "rf-strong", "strong-martin"}));
    conj->add_option("--q-min", o.q_min);
    conj->add_option("--q-max", o.scan_q_max);
    conj->add_option("--n-max", o.n_max, "Largest n for rf scans");
    conj->add_option("--n", o.n, "Tuple length for strong-martin");

    auto* figures = app.add_subcommand("figures", "Emit plot data");
    figures->add_option("figure", o.figure_id)->required()->check(CLI::Range(1, 5));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*transform) return cmd_transform(o, out);
        if (*verify) return cmd_verify(o, out);
        if (*construct) return cmd_construct(o, out);
        if (*search) return cmd_search(o, out);
        if (*identities) return cmd_identities(o, out);
        if (*conj) return cmd_conjectures(o, out);
        if (*figures) return cmd_figures(o, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace beatty
