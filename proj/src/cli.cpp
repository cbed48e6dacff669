#include "bno/cli.hpp"

#include "bno/contraction.hpp"
#include "bno/diagram.hpp"
#include "bno/egf.hpp"
#include "bno/errors.hpp"
#include "bno/json_io.hpp"
#include "bno/normal_order.hpp"
#include "bno/partitions.hpp"
#include "bno/stirling.hpp"
#include "bno/verify.hpp"
#include "bno/weight.hpp"
#include "bno/word.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <map>

namespace bno {

namespace {

using nlohmann::json;

void write_output(const std::string& text, const std::string& out_file, std::ostream& out) {
    if (out_file.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_file, std::ios::binary);
    if (!f) throw domain_error("cannot open output file '" + out_file + "'");
    f << text;
}

int cmd_normal(const std::string& word_text, const std::string& model, bool as_json,
               long long guard, const std::string& out_file, std::ostream& out) {
    Word w = parse_word(word_text);
    std::string text;
    json j;
    if (model == "omega") {
        NormalForm nf = normal_order_omega(w, guard);
        text = render(nf);
        j = to_json(nf, word_text);
    } else {
        PolyNormalForm nf = (model == "p") ? normal_order_p(w, guard)
                                           : normal_order_standard(w, guard);
        text = render(nf);
        j = to_json(nf, word_text, model);
    }
    write_output(as_json ? j.dump(2) + "\n" : text + "\n", out_file, out);
    return 0;
}

int cmd_stirling(const std::string& kind, int n, int k, int m, bool has_k, bool has_m,
                 bool as_json, long long guard, const std::string& out_file, std::ostream& out) {
    auto cell = [&](int row, int col) -> std::string {
        if (kind == "classic") return stirling2(row, col).get_str();
        if (kind == "p") return render(stirling_p_rec(row, col));
        if (kind == "omega") return render(stirling_omega(row, col, guard));
        if (kind == "knm") return stirling_knm(row, col, m).get_str();
        throw domain_error("unknown stirling kind '" + kind + "'");
    };
    if (kind == "knm" && !has_m) throw domain_error("--kind knm requires --m");
    std::string text;
    if (has_k) {
        text = cell(n, k) + "\n";
        if (as_json) text = json{{"kind", kind}, {"n", n}, {"k", k}, {"value", cell(n, k)}}
                                .dump(2) +
                            "\n";
    } else if (as_json) {
        json rows = json::array();
        for (int row = 1; row <= n; ++row) {
            json cols = json::array();
            for (int col = 1; col <= row; ++col) cols.push_back(cell(row, col));
            rows.push_back(cols);
        }
        text = json{{"kind", kind}, {"n", n}, {"rows", rows}}.dump(2) + "\n";
    } else {
        // TSV triangle: row n, columns k = 1..n
        for (int row = 1; row <= n; ++row) {
            text += std::to_string(row);
            for (int col = 1; col <= row; ++col) text += "\t" + cell(row, col);
            text += "\n";
        }
    }
    write_output(text, out_file, out);
    return 0;
}

int cmd_bell(int n, bool p0, bool omega, bool as_json, long long guard,
             const std::string& out_file, std::ostream& out) {
    std::string value;
    std::string kind = "classic";
    if (p0) {
        Int sum = 0;
        for (int k = 1; k <= n; ++k) sum += stirling_p_rec(n, k).evaluate(0);
        value = sum.get_str();
        kind = "p0";
    } else if (omega) {
        value = render(bell_omega(n, guard));
        kind = "omega";
    } else {
        value = bell_number(n).get_str();
    }
    std::string text = as_json ? json{{"kind", kind}, {"n", n}, {"value", value}}.dump(2) + "\n"
                               : value + "\n";
    write_output(text, out_file, out);
    return 0;
}

int cmd_contractions(const std::string& word_text, bool list, bool as_json, long long guard,
                     const std::string& out_file, std::ostream& out) {
    Word w = parse_word(word_text);
    if (!list) {
        std::string value = count_contractions(w).get_str();
        std::string text = as_json
                               ? json{{"word", word_text}, {"count", value}}.dump(2) + "\n"
                               : value + "\n";
        write_output(text, out_file, out);
        return 0;
    }
    std::vector<Contraction> all = all_contractions(w, guard);
    std::map<std::string, int> word_multiplicity;
    for (const Contraction& c : all) word_multiplicity[render(contraction_word(w, c))] += 1;
    std::string text;
    json items = json::array();
    for (const Contraction& c : all) {
        std::string cw = render(contraction_word(w, c));
        int mult = word_multiplicity[cw];
        if (as_json) {
            items.push_back({{"edges", render(c)},
                             {"word", cw},
                             {"multiplicity", mult},
                             {"r_degree", r_degree(c)},
                             {"p_degree", p_degree(c)},
                             {"crossings", crossing_number(c)}});
        } else {
            text += (c.edges.empty() ? "(null)" : render(c)) + "\t" + cw;
            if (mult > 1) text += "\t(word multiplicity " + std::to_string(mult) + ")";
            text += "\n";
        }
    }
    if (as_json)
        text = json{{"word", word_text}, {"count", all.size()}, {"contractions", items}}.dump(2) +
               "\n";
    write_output(text, out_file, out);
    return 0;
}

int cmd_bijection(int n, const std::string& contraction_text, const std::string& vector_text,
                  const std::string& partition_text, bool as_json, const std::string& out_file,
                  std::ostream& out) {
    Contraction c;
    if (!contraction_text.empty()) {
        c = parse_contraction(contraction_text);
        if (n == 0) throw domain_error("--contraction requires --n");
    } else if (!vector_text.empty()) {
        PointerVector v = parse_pointer_vector(vector_text);
        n = static_cast<int>(v.size()) + 1;
        c = lemma2_inverse(v);
    } else if (!partition_text.empty()) {
        SetPartition p = parse_partition(partition_text);
        n = static_cast<int>(p.ground_size());
        c = lemma2_inverse(lemma1_inverse(p));
    } else {
        throw domain_error("bijection needs one of --contraction, --vector, --partition");
    }
    PointerVector v = lemma2_forward(n, c);
    SetPartition p = lemma1_forward(v);
    std::string text;
    if (as_json) {
        text = json{{"n", n},
                    {"contraction", render(c)},
                    {"vector", render(v)},
                    {"partition", render(p)},
                    {"blocks", p.blocks.size()},
                    {"rises", rises(p)},
                    {"r_degree", r_degree(c)},
                    {"p_degree", p_degree(c)}}
                   .dump(2) +
               "\n";
    } else {
        text = "word: " + render(number_operator_word(n)) + "\n" +
               "contraction: " + (c.edges.empty() ? "(null)" : render(c)) + "\n" +
               "vector: " + render(v) + "\n" + "partition: " + render(p) + "\n" +
               "blocks: " + std::to_string(p.blocks.size()) +
               ", rises: " + std::to_string(rises(p)) + "\n";
    }
    write_output(text, out_file, out);
    return 0;
}

int cmd_diagram(const std::string& word_text, const std::string& contraction_text,
                const std::string& format, const std::string& out_file, std::ostream& out) {
    Word w = parse_word(word_text);
    Contraction c = parse_contraction(contraction_text);
    std::string text = (format == "svg") ? emit_svg(w, c) : emit_ascii(w, c);
    write_output(text, out_file, out);
    return 0;
}

int cmd_verify(int max_n, int order, long long guard, bool inject_fault, bool as_json,
               const std::string& out_file, std::ostream& out) {
    VerifyOptions options;
    options.max_n = max_n;
    options.order = order;
    options.guard = guard;
    options.inject_fault = inject_fault;
    std::vector<CheckResult> results = run_verification(options);
    std::string text;
    if (as_json) {
        json checks = json::array();
        for (const CheckResult& r : results)
            checks.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        text = json{{"max_n", max_n}, {"order", order}, {"pass", all_passed(results)},
                    {"checks", checks}}
                   .dump(2) +
               "\n";
    } else {
        for (const CheckResult& r : results) {
            text += (r.pass ? "PASS " : "FAIL ") + r.name;
            if (!r.detail.empty()) text += "  [" + r.detail + "]";
            text += "\n";
        }
        std::size_t passed = 0;
        for (const CheckResult& r : results) passed += r.pass ? 1 : 0;
        text += std::to_string(passed) + "/" + std::to_string(results.size()) + " checks passed\n";
    }
    write_output(text, out_file, out);
    return all_passed(results) ? 0 : 3;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact contraction-enumeration engine for generalized boson normal ordering"};
    app.require_subcommand(1);
    app.fallthrough(); // lets --json/--guard/--out appear after the subcommand

    long long guard = kDefaultGuard;
    bool as_json = false;
    std::string out_file;
    app.add_option("--guard", guard, "contraction budget for enumerations (<=0 disables)");
    app.add_flag("--json", as_json, "emit JSON instead of text");
    app.add_option("--out", out_file, "write output to a file");

    auto* normal = app.add_subcommand("normal", "normally order a word");
    std::string word_text, model = "standard";
    normal->add_option("--word", word_text, "word over the grammar a|d|(..)^k")->required();
    normal->add_option("--model", model, "standard, p, or omega")
        ->check(CLI::IsMember({"standard", "p", "omega"}));

    auto* stirling = app.add_subcommand("stirling", "Stirling number tables and entries");
    std::string kind = "classic";
    int n = 0, k = 0, m = 0;
    stirling->add_option("--kind", kind, "classic, p, omega, or knm")
        ->check(CLI::IsMember({"classic", "p", "omega", "knm"}));
    stirling->add_option("--n", n, "row index")->required();
    auto* k_opt = stirling->add_option("--k", k, "column index (omit for the whole triangle)");
    auto* m_opt = stirling->add_option("--m", m, "rise count (kind knm)");

    auto* bell = app.add_subcommand("bell", "Bell numbers and their generalizations");
    bool p0 = false, bell_omega_flag = false;
    bell->add_option("--n", n, "index")->required();
    bell->add_flag("--p0", p0, "sum of S_p(n,k) at p=0");
    bell->add_flag("--omega", bell_omega_flag, "omega-weighted Bell polynomial");

    auto* contractions = app.add_subcommand("contractions", "enumerate or count contractions");
    bool list = false, count_only = false;
    contractions->add_option("--word", word_text, "host word")->required();
    contractions->add_flag("--list", list, "list edge sets and contraction words");
    contractions->add_flag("--count", count_only, "print only the count (default)");

    auto* bijection = app.add_subcommand("bijection", "contraction <-> vector <-> partition");
    std::string contraction_text, vector_text, partition_text;
    bijection->add_option("--n", n, "number-operator power");
    bijection->add_option("--contraction", contraction_text, "edge list like 2-3,4-5");
    bijection->add_option("--vector", vector_text, "pointer vector like 1,e,3,e");
    bijection->add_option("--partition", partition_text, "partition like {1,2},{3,4},{5}");

    auto* diagram = app.add_subcommand("diagram", "linear representation of a contraction");
    std::string format = "ascii";
    diagram->add_option("--word", word_text, "host word")->required();
    diagram->add_option("--contraction", contraction_text, "edge list (empty for null)");
    diagram->add_option("--format", format, "svg or ascii")
        ->check(CLI::IsMember({"svg", "ascii"}));

    auto* verify = app.add_subcommand("verify", "run the cross-route identity suite");
    int max_n = 8, order = 10;
    bool inject_fault = false;
    verify->add_option("--max-n", max_n, "depth of the exhaustive checks");
    verify->add_option("--order", order, "generating-function truncation order");
    verify->add_flag("--inject-fault", inject_fault, "negative control: force one failing check")
        ->group(""); // hidden

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (normal->parsed()) return cmd_normal(word_text, model, as_json, guard, out_file, out);
        if (stirling->parsed())
            return cmd_stirling(kind, n, k, m, k_opt->count() > 0, m_opt->count() > 0, as_json,
                                guard, out_file, out);
        if (bell->parsed())
            return cmd_bell(n, p0, bell_omega_flag, as_json, guard, out_file, out);
        if (contractions->parsed())
            return cmd_contractions(word_text, list && !count_only, as_json, guard, out_file, out);
        if (bijection->parsed())
            return cmd_bijection(n, contraction_text, vector_text, partition_text, as_json,
                                 out_file, out);
        if (diagram->parsed())
            return cmd_diagram(word_text, contraction_text, format, out_file, out);
        if (verify->parsed())
            return cmd_verify(max_n, order, guard, inject_fault, as_json, out_file, out);
        err << "error: no subcommand\n";
        return 1;
    } catch (const capacity_error& e) {
        err << "capacity error: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        err << "syntax error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace bno
