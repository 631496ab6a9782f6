// waring: command-line front end.
//
//   waring decompose FILE [--method M] [--field exact|float] [--seed N] [--json]
//   waring rank-bound FILE [--method M] [--json]
//   waring info N D [R] [--json]
//   waring generate N D R [--seed N] -o OUT
//
// Exit status: 0 success, 1 input error, 2 the method could not decompose.

#include <waring/waring.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

using namespace waring;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitFailure = 2;

const std::map<std::string, Method> kMethods = {{"auto", Method::automatic},
                                                {"catalecticant", Method::catalecticant},
                                                {"koszul", Method::koszul_a1},
                                                {"koszul-general", Method::koszul_general}};

struct InputFailure {
    std::string message;
};

PolyFile load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputFailure{path + ": cannot open file"};
    try {
        return parse_polyfile(in);
    } catch (const ParseError& e) {
        throw InputFailure{path + ":" + e.what()};
    }
}

json flattening_json(const FlatteningSummary& s) {
    return json{{"method", to_string(s.method)}, {"m", s.m},        {"a", s.a},
                {"rows", s.rows},                {"cols", s.cols},  {"rank", s.rank},
                {"kernel_dim", s.kernel_dim},    {"bundle_rank", s.bundle_rank}};
}

std::string flattening_line(const FlatteningSummary& s) {
    return "flattening " + std::string(to_string(s.method)) + " m=" + std::to_string(s.m) + " a=" +
           std::to_string(s.a) + " " + std::to_string(s.rows) + "x" + std::to_string(s.cols) + " rank " +
           std::to_string(s.rank) + " kernel " + std::to_string(s.kernel_dim);
}

int report_success(const Decomposition& dec, const PolyFile& file, Field field, bool as_json) {
    const std::size_t d = file.poly.degree();
    // irrational points have no exact form; they print in floating point either way
    const Field shown = dec.exact ? field : Field::floating;
    if (as_json) {
        json terms = json::array();
        for (const auto& t : dec.terms) {
            RenderedTerm r = render_term(t, d, shown);
            terms.push_back({{"coefficient", r.coefficient}, {"point", r.coordinates}, {"form", r.form}});
        }
        json out{{"status", "ok"},
                 {"n", file.poly.n()},
                 {"d", d},
                 {"field", to_string(shown)},
                 {"method", to_string(dec.method)},
                 {"terms", terms},
                 {"residual", dec.residual},
                 {"rank_lower_bound", dec.rank_lower_bound},
                 {"base_locus_points", dec.locus_size},
                 {"subsets_tried", dec.subsets_tried},
                 {"flattening", flattening_json(dec.flattening)}};
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "# waring " << file.poly.n() << " " << d << " " << to_string(shown) << "\n";
    for (const auto& t : dec.terms) {
        RenderedTerm r = render_term(t, d, shown);
        std::cout << "term " << r.coefficient << " :";
        for (const auto& c : r.coordinates) std::cout << " " << c;
        std::cout << "  # " << r.form << "\n";
    }
    std::cout << "residual " << dec.residual << "\n";
    std::cout << "method " << to_string(dec.method) << "\n";
    std::cout << "rank_lower_bound " << dec.rank_lower_bound << "\n";
    std::cout << "base_locus_points " << dec.locus_size << "\n";
    std::cout << flattening_line(dec.flattening) << "\n";
    return kExitOk;
}

int report_failure(const FailureReport& f, bool as_json) {
    if (as_json) {
        json out{{"status", "failure"}, {"stage", to_string(f.stage)}, {"method", to_string(f.method)}};
        out["rank_lower_bound"] = f.rank_lower_bound ? json(*f.rank_lower_bound) : json(nullptr);
        if (f.locus_dimension >= 0) out["base_locus_dimension"] = f.locus_dimension;
        if (f.flattening) out["flattening"] = flattening_json(*f.flattening);
        out["detail"] = f.detail;
        std::cout << out.dump(2) << "\n";
        return kExitFailure;
    }
    std::cout << "failure " << to_string(f.stage) << "\n";
    std::cout << "method " << to_string(f.method) << "\n";
    if (f.rank_lower_bound) std::cout << "rank_lower_bound " << *f.rank_lower_bound << "\n";
    if (f.locus_dimension >= 0) std::cout << "base_locus_dimension " << f.locus_dimension << "\n";
    if (f.flattening) std::cout << flattening_line(*f.flattening) << "\n";
    if (!f.detail.empty()) std::cout << "detail " << f.detail << "\n";
    return kExitFailure;
}

int cmd_decompose(const std::string& path, Method method, std::optional<std::string> field_name, std::uint64_t seed,
                  bool as_json) {
    PolyFile file = load(path);
    Field field = file.field;
    if (field_name) field = *field_name == "exact" ? Field::exact : Field::floating;
    DecomposeOptions opts;
    opts.method = method;
    opts.seed = seed;
    DecomposeResult res;
    try {
        res = decompose(file.poly, opts);
    } catch (const InputError& e) {
        throw InputFailure{path + ": " + e.what()};
    }
    return res.ok() ? report_success(*res.decomposition, file, field, as_json) : report_failure(*res.failure, as_json);
}

int cmd_rank_bound(const std::string& path, Method method, bool as_json) {
    PolyFile file = load(path);
    FlatteningSummary s;
    try {
        s = rank_bound(file.poly, method);
    } catch (const InputError& e) {
        throw InputFailure{path + ": " + e.what()};
    }
    if (as_json) {
        std::cout << json{{"rank_lower_bound", s.rank_lower_bound()}, {"flattening", flattening_json(s)}}.dump(2)
                  << "\n";
    } else {
        std::cout << "rank_lower_bound " << s.rank_lower_bound() << "\n" << flattening_line(s) << "\n";
    }
    return kExitOk;
}

int cmd_info(std::size_t n, std::size_t d, std::optional<std::size_t> r_opt, bool as_json) {
    if (n < 1 || n + 1 > kMaxVars) throw InputFailure{"n must be between 1 and " + std::to_string(kMaxVars - 1)};
    if (d < 2) throw InputFailure{"d must be at least 2"};
    const std::size_t g = generic_rank(n, d);
    const std::size_t r = r_opt.value_or(g);
    if (r < 1) throw InputFailure{"r must be at least 1"};
    json methods = json::array();
    for (Method m : {Method::catalecticant, Method::koszul_a1, Method::koszul_general}) {
        PipelinePlan p = plan_for(m, n, d);
        json entry{{"method", to_string(m)}, {"m", p.m}, {"a", p.a}, {"applicability", to_string(applicability(n, d, r, m))}};
        entry["eigenvectors"] = p.a == 0 ? json(nullptr) : json(eigenvector_count(n, p.m, p.a).str());
        methods.push_back(entry);
    }
    if (as_json) {
        json out{{"n", n},
                 {"d", d},
                 {"generic_rank", g},
                 {"r", r},
                 {"uniqueness", to_string(uniqueness_class(n, d, r))},
                 {"defective", is_defective(n, d, r)},
                 {"methods", methods}};
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "n " << n << "\nd " << d << "\ngeneric_rank " << g << "\n";
    std::cout << "r " << r << "\nuniqueness " << to_string(uniqueness_class(n, d, r)) << "\n";
    for (const auto& e : methods) {
        std::cout << "method " << e["method"].get<std::string>() << " m=" << e["m"] << " a=" << e["a"] << " "
                  << e["applicability"].get<std::string>();
        if (!e["eigenvectors"].is_null()) std::cout << " eigenvectors " << e["eigenvectors"].get<std::string>();
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_generate(std::size_t n, std::size_t d, std::size_t r, std::uint64_t seed, const std::string& out_path) {
    if (n < 1 || n + 1 > kMaxVars) throw InputFailure{"n must be between 1 and " + std::to_string(kMaxVars - 1)};
    if (d < 2) throw InputFailure{"d must be at least 2"};
    if (r < 1) throw InputFailure{"r must be at least 1"};
    GeneratedInstance g = generate_random_rank_r(n, d, r, seed);
    std::ofstream out(out_path);
    if (!out) throw InputFailure{out_path + ": cannot write file"};
    out << "# sum of " << r << " powers, seed " << seed << "\n" << print_polyfile(PolyFile{Field::exact, g.f});
    std::ofstream truth(out_path + ".truth");
    if (!truth) throw InputFailure{out_path + ".truth: cannot write file"};
    truth << "# ground truth for " << out_path << "\n";
    for (std::size_t i = 0; i < g.forms.size(); ++i) {
        truth << "term " << g.coefficients[i].get_str() << " :";
        for (const auto& x : g.forms[i]) truth << " " << x.get_str();
        truth << "\n";
    }
    std::cout << "wrote " << out_path << " and " << out_path << ".truth\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Waring decompositions of homogeneous polynomials"};
    app.require_subcommand(1);

    std::string path;
    std::string method_name = "auto";
    std::optional<std::string> field_name;
    std::uint64_t seed = 0x5eed;
    bool as_json = false;

    auto* dec = app.add_subcommand("decompose", "decompose the polynomial in FILE");
    dec->add_option("file", path, "polynomial file")->required();
    dec->add_option("--method", method_name, "auto, catalecticant, koszul or koszul-general")
        ->check(CLI::IsMember({"auto", "catalecticant", "koszul", "koszul-general"}));
    dec->add_option("--field", field_name, "output field, defaults to the file's")->check(CLI::IsMember({"exact", "float"}));
    dec->add_option("--seed", seed, "seed for charts and subset order");
    dec->add_flag("--json", as_json, "print one JSON object");

    auto* rb = app.add_subcommand("rank-bound", "print rank(P_f) / bundle rank");
    rb->add_option("file", path, "polynomial file")->required();
    rb->add_option("--method", method_name, "auto, catalecticant, koszul or koszul-general")
        ->check(CLI::IsMember({"auto", "catalecticant", "koszul", "koszul-general"}));
    rb->add_flag("--json", as_json, "print one JSON object");

    std::size_t n = 0, d = 0;
    std::optional<std::size_t> r_opt;
    auto* info = app.add_subcommand("info", "generic rank, uniqueness and method ranges");
    info->add_option("n", n, "projective dimension")->required();
    info->add_option("d", d, "degree")->required();
    info->add_option("r", r_opt, "rank (defaults to the generic rank)");
    info->add_flag("--json", as_json, "print one JSON object");

    std::size_t gen_r = 0;
    std::string out_path;
    auto* gen = app.add_subcommand("generate", "write a random sum of r powers and its ground truth");
    gen->add_option("n", n, "projective dimension")->required();
    gen->add_option("d", d, "degree")->required();
    gen->add_option("r", gen_r, "number of summands")->required();
    gen->add_option("--seed", seed, "seed");
    gen->add_option("-o,--output", out_path, "output file; the ground truth goes to OUT.truth")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        const Method method = kMethods.at(method_name);
        if (*dec) return cmd_decompose(path, method, field_name, seed, as_json);
        if (*rb) return cmd_rank_bound(path, method, as_json);
        if (*info) return cmd_info(n, d, r_opt, as_json);
        if (*gen) return cmd_generate(n, d, gen_r, seed, out_path);
    } catch (const InputFailure& e) {
        std::cerr << "error: " << e.message << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
