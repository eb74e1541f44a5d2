#include "schoenberg/job.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <variant>

#include <json.hpp>

#include "schoenberg/errors.hpp"
#include "schoenberg/groups.hpp"
#include "schoenberg/kernels.hpp"
#include "schoenberg/pdcheck.hpp"
#include "schoenberg/quadrature.hpp"
#include "schoenberg/sphere_complex.hpp"
#include "schoenberg/sphere_real.hpp"
#include "schoenberg/symdiff.hpp"

namespace schoenberg::job {

namespace {

using nlohmann::json;
using cplx = std::complex<double>;

// ---------------------------------------------------------------- format

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

class CsvWriter {
  public:
    CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header)
        : out_(path, std::ios::binary) {
        if (!out_) throw ConfigError("cannot open output file " + path.string());
        for (size_t i = 0; i < header.size(); ++i)
            out_ << (i ? "," : "") << header[i];
        out_ << "\n";
    }

    void row(const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << cells[i];
        out_ << "\n";
    }

  private:
    std::ofstream out_;
};

// ---------------------------------------------------------------- config

const json& need(const json& j, const std::string& key, const std::string& where) {
    const auto it = j.find(key);
    if (it == j.end()) throw ConfigError(where + "." + key + " is required");
    return *it;
}

int need_int(const json& j, const std::string& key, const std::string& where) {
    const auto& v = need(j, key, where);
    if (!v.is_number_integer()) throw ConfigError(where + "." + key + " must be an integer");
    return v.get<int>();
}

int opt_int(const json& j, const std::string& key, int fallback) {
    const auto it = j.find(key);
    if (it == j.end()) return fallback;
    if (!it->is_number_integer()) throw ConfigError("params." + key + " must be an integer");
    return it->get<int>();
}

double opt_double(const json& j, const std::string& key, double fallback) {
    const auto it = j.find(key);
    if (it == j.end()) return fallback;
    if (!it->is_number()) throw ConfigError("params." + key + " must be a number");
    return it->get<double>();
}

// "element": integer id, or "all" (encoded -1)
int parse_element(const json& params, const GroupSpec& g, int fallback) {
    const auto it = params.find("element");
    if (it == params.end()) return fallback;
    if (it->is_string()) {
        if (it->get<std::string>() == "all") return -1;
        throw ConfigError("params.element must be an integer or \"all\"");
    }
    if (!it->is_number_integer()) throw ConfigError("params.element must be an integer or \"all\"");
    const int e = it->get<int>();
    if (e < -1 || e >= g.order) throw ConfigError("params.element out of range for the group");
    return e;
}

std::vector<int> parse_dim_list(const json& params, const std::string& key, int min_allowed) {
    const auto it = params.find(key);
    if (it == params.end()) throw ConfigError("params." + key + " is required for this task");
    std::vector<int> dims;
    if (it->is_array()) {
        for (const auto& v : *it) {
            if (!v.is_number_integer()) throw ConfigError("params." + key + " must hold integers");
            dims.push_back(v.get<int>());
        }
    } else if (it->is_object()) {
        const int from = need_int(*it, "from", "params." + key);
        const int to = need_int(*it, "to", "params." + key);
        for (int d = from; d <= to; ++d) dims.push_back(d);
    } else {
        throw ConfigError("params." + key + " must be a list or {from, to}");
    }
    if (dims.empty()) throw ConfigError("params." + key + " must be nonempty");
    for (int d : dims)
        if (d < min_allowed)
            throw ConfigError("params." + key + " entries must be >= " +
                              std::to_string(min_allowed));
    return dims;
}

GroupSpec parse_group(const json& root) {
    const auto it = root.find("group");
    if (it == root.end()) return make_cyclic(1);
    const auto& g = *it;
    if (g.contains("builtin")) {
        const std::string name = g["builtin"].get<std::string>();
        if (name == "trivial") return make_cyclic(1);
        if (name == "cyclic") return make_cyclic(need_int(g, "k", "group"));
        throw ConfigError("group.builtin must be \"trivial\" or \"cyclic\"");
    }
    if (g.contains("table_file")) {
        const std::string path = g["table_file"].get<std::string>();
        std::ifstream in(path);
        if (!in) throw ConfigError("group.table_file: cannot open " + path);
        int order = 0;
        if (!(in >> order) || order < 1)
            throw ConfigError("group.table_file: first token must be the order");
        std::vector<int> mul(static_cast<size_t>(order) * order);
        for (auto& v : mul)
            if (!(in >> v)) throw ConfigError("group.table_file: truncated multiplication table");
        try {
            return make_from_table(order, mul);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("group.table_file: ") + e.what());
        }
    }
    throw ConfigError("group must specify builtin or table_file");
}

struct KernelConfig {
    bool complex_space = false;
    RealKernelModel real{RealMonomialSeries{}};
    ComplexKernelModel complex{ComplexMonomialSeries{}};
};

GroupFunction& slot(std::map<int, GroupFunction>& entries, int key, int order) {
    auto& gf = entries[key];
    if (gf.values.empty()) gf.values.assign(order, cplx(0.0, 0.0));
    return gf;
}

GroupFunction& slot(std::map<std::pair<int, int>, GroupFunction>& entries, std::pair<int, int> key,
                    int order) {
    auto& gf = entries[key];
    if (gf.values.empty()) gf.values.assign(order, cplx(0.0, 0.0));
    return gf;
}

KernelConfig parse_kernel(const json& root, const GroupSpec& g) {
    const auto& k = need(root, "kernel", "config");
    KernelConfig out;

    if (k.contains("builtin")) {
        const std::string name = k["builtin"].get<std::string>();
        if (g.order != 1)
            throw ConfigError("kernel.builtin demos are defined over the trivial group");
        if (name == "demo:x2") {
            RealMonomialSeries f;
            f.coeffs.entries[2] = GroupFunction{{cplx(1.0, 0.0)}};
            out.real = f;
            return out;
        }
        if (name == "demo:zzbar") {
            ComplexMonomialSeries f;
            f.coeffs.entries[{1, 1}] = GroupFunction{{cplx(1.0, 0.0)}};
            out.complex_space = true;
            out.complex = f;
            return out;
        }
        throw ConfigError("kernel.builtin must be \"demo:x2\" or \"demo:zzbar\"");
    }

    const std::string space = need(k, "space", "kernel").get<std::string>();
    const std::string model = need(k, "model", "kernel").get<std::string>();
    const auto& entries = need(k, "entries", "kernel");
    if (!entries.is_array() || entries.empty())
        throw ConfigError("kernel.entries must be a nonempty list");

    if (space == "real") {
        RealCoefficientTable table;
        for (const auto& e : entries) {
            const int n = need_int(e, "n", "kernel.entries");
            const int element = need_int(e, "element", "kernel.entries");
            if (n < 0) throw ConfigError("kernel.entries.n must be >= 0");
            if (element < 0 || element >= g.order)
                throw ConfigError("kernel.entries.element out of range for the group");
            slot(table.entries, n, g.order).values[element] +=
                cplx(opt_double(e, "re", 0.0), opt_double(e, "im", 0.0));
        }
        if (model == "monomial") {
            out.real = RealMonomialSeries{table};
        } else if (model == "gegenbauer") {
            GegenbauerSeries f;
            f.d = need_int(k, "d", "kernel");
            if (f.d < 1) throw ConfigError("kernel.d must be >= 1");
            f.coeffs = table;
            out.real = f;
        } else {
            throw ConfigError("kernel.model for real space must be monomial or gegenbauer");
        }
        return out;
    }
    if (space == "complex") {
        out.complex_space = true;
        ComplexCoefficientTable table;
        for (const auto& e : entries) {
            const int m = need_int(e, "m", "kernel.entries");
            const int n = need_int(e, "n", "kernel.entries");
            const int element = need_int(e, "element", "kernel.entries");
            if (m < 0 || n < 0) throw ConfigError("kernel.entries indices must be >= 0");
            if (element < 0 || element >= g.order)
                throw ConfigError("kernel.entries.element out of range for the group");
            slot(table.entries, {m, n}, g.order).values[element] +=
                cplx(opt_double(e, "re", 0.0), opt_double(e, "im", 0.0));
        }
        if (model == "monomial") {
            out.complex = ComplexMonomialSeries{table};
        } else if (model == "disc") {
            DiscSeries f;
            f.q = need_int(k, "q", "kernel");
            if (f.q < 2) throw ConfigError("kernel.q must be >= 2");
            f.coeffs = table;
            out.complex = f;
        } else {
            throw ConfigError("kernel.model for complex space must be monomial or disc");
        }
        return out;
    }
    throw ConfigError("kernel.space must be \"real\" or \"complex\"");
}

// ---------------------------------------------------------------- tasks

struct TaskContext {
    json params;
    GroupSpec group;
    std::optional<KernelConfig> kernel_config;
    std::filesystem::path out_dir;
    std::uint64_t seed = 0;
    json manifest;
    std::vector<std::string> outputs;
    bool quiet = false;

    std::filesystem::path out(const std::string& name) {
        outputs.push_back(name);
        return out_dir / name;
    }

    const KernelConfig& kernel() const {
        if (!kernel_config) throw ConfigError("kernel is required for this task");
        return *kernel_config;
    }
};

int task_limit_table(TaskContext& ctx) {
    std::vector<LimitRow> rows;
    if (!ctx.kernel().complex_space) {
        const int n = need_int(ctx.params, "n", "params");
        const auto dims = parse_dim_list(ctx.params, "d_list", 1);
        const int element = parse_element(ctx.params, ctx.group, -1);
        rows = limit_study_real(ctx.kernel().real, n, dims, element, ctx.group);
        ctx.manifest["resolved"] = {{"n", n}, {"d_list", dims}, {"element", element}};
    } else {
        const int m = need_int(ctx.params, "m", "params");
        const int n = need_int(ctx.params, "n", "params");
        const auto dims = parse_dim_list(ctx.params, "q_list", 2);
        const int element = parse_element(ctx.params, ctx.group, -1);
        rows = limit_study_complex(ctx.kernel().complex, m, n, dims, element, ctx.group);
        ctx.manifest["resolved"] = {{"m", m}, {"n", n}, {"q_list", dims}, {"element", element}};
    }
    CsvWriter csv(ctx.out("limit_table.csv"), {"dim", "element", "phi_re", "phi_im", "error"});
    for (const auto& r : rows)
        csv.row({std::to_string(r.dim), std::to_string(r.element), fmt(r.value.real()),
                 fmt(r.value.imag()), fmt(r.abs_error)});
    return 0;
}

int task_extract(TaskContext& ctx) {
    if (!ctx.kernel().complex_space) {
        const auto dims = parse_dim_list(ctx.params, "d_list", 1);
        const int n_max = opt_int(ctx.params, "n_max",
                                  std::max(polynomial_degree(ctx.kernel().real), 0));
        ctx.manifest["resolved"] = {{"d_list", dims}, {"n_max", n_max}};
        CsvWriter csv(ctx.out("extract.csv"), {"d", "n", "element", "re", "im"});
        for (int d : dims)
            for (int n = 0; n <= n_max; ++n)
                for (int u = 0; u < ctx.group.order; ++u) {
                    const cplx v = extract_coefficient_real(ctx.kernel().real, n, d, u);
                    csv.row({std::to_string(d), std::to_string(n), std::to_string(u),
                             fmt(v.real()), fmt(v.imag())});
                }
        return 0;
    }
    const auto dims = parse_dim_list(ctx.params, "q_list", 2);
    const int mn_max = opt_int(ctx.params, "mn_max",
                               std::max(polynomial_degree(ctx.kernel().complex), 0));
    ctx.manifest["resolved"] = {{"q_list", dims}, {"mn_max", mn_max}};
    CsvWriter csv(ctx.out("extract.csv"), {"q", "m", "n", "element", "re", "im"});
    for (int q : dims)
        for (int m = 0; m <= mn_max; ++m)
            for (int n = 0; m + n <= mn_max; ++n)
                for (int u = 0; u < ctx.group.order; ++u) {
                    const cplx v = extract_coefficient_complex(ctx.kernel().complex, m, n, q, u);
                    csv.row({std::to_string(q), std::to_string(m), std::to_string(n),
                             std::to_string(u), fmt(v.real()), fmt(v.imag())});
                }
    return 0;
}

int task_evaluate(TaskContext& ctx) {
    if (!ctx.kernel().complex_space) {
        const auto& grid = need(ctx.params, "x_grid", "params");
        if (!grid.is_array() || grid.empty())
            throw ConfigError("params.x_grid must be a nonempty list of numbers");
        CsvWriter csv(ctx.out("evaluate.csv"), {"x", "element", "re", "im"});
        for (const auto& xv : grid) {
            const double x = xv.get<double>();
            for (int u = 0; u < ctx.group.order; ++u) {
                const cplx v = evaluate(ctx.kernel().real, x, u);
                csv.row({fmt(x), std::to_string(u), fmt(v.real()), fmt(v.imag())});
            }
        }
        return 0;
    }
    const auto& grid = need(ctx.params, "z_grid", "params");
    if (!grid.is_array() || grid.empty())
        throw ConfigError("params.z_grid must be a nonempty list of [re, im] pairs");
    CsvWriter csv(ctx.out("evaluate.csv"), {"z_re", "z_im", "element", "re", "im"});
    for (const auto& zv : grid) {
        if (!zv.is_array() || zv.size() != 2)
            throw ConfigError("params.z_grid entries must be [re, im] pairs");
        const cplx z(zv[0].get<double>(), zv[1].get<double>());
        for (int u = 0; u < ctx.group.order; ++u) {
            const cplx v = evaluate(ctx.kernel().complex, z, u);
            csv.row({fmt(z.real()), fmt(z.imag()), std::to_string(u), fmt(v.real()),
                     fmt(v.imag())});
        }
    }
    return 0;
}

int task_check_pd(TaskContext& ctx) {
    const int points = opt_int(ctx.params, "points", 12);
    const double tol = opt_double(ctx.params, "tol", 1e-8);
    GramReport report;
    if (!ctx.kernel().complex_space) {
        const int d = opt_int(ctx.params, "d", 2);
        if (d < 1) throw ConfigError("params.d must be >= 1");
        const auto pts = sample_sphere_real(d, points, ctx.seed);
        report = gram_check(ctx.kernel().real, pts, ctx.group, {}, tol);
        ctx.manifest["resolved"] = {{"d", d}, {"points", points}, {"tol", tol}};
    } else {
        const int q = opt_int(ctx.params, "q", 2);
        if (q < 2) throw ConfigError("params.q must be >= 2");
        const auto pts = sample_sphere_complex(q, points, ctx.seed);
        report = gram_check(ctx.kernel().complex, pts, ctx.group, {}, tol);
        ctx.manifest["resolved"] = {{"q", q}, {"points", points}, {"tol", tol}};
    }

    const char* verdict = report.verdict == PdKind::pd               ? "pd"
                          : report.verdict == PdKind::not_pd         ? "not_pd"
                                                                     : "non_hermitian";
    ctx.manifest["verdict"] = verdict;
    ctx.manifest["min_eigenvalue"] = report.min_eigenvalue;
    ctx.manifest["trace"] = report.trace;
    ctx.manifest["witness_quadform"] = report.witness_quadform;
    ctx.manifest["hermitian_defect"] = report.hermitian_defect;

    CsvWriter csv(ctx.out("checkpd.csv"),
                  {"verdict", "size", "min_eigenvalue", "trace", "witness_quadform"});
    csv.row({verdict, std::to_string(report.size), fmt(report.min_eigenvalue), fmt(report.trace),
             fmt(report.witness_quadform)});
    if (!report.witness.empty()) {
        CsvWriter wit(ctx.out("witness.csv"), {"index", "re", "im"});
        for (size_t i = 0; i < report.witness.size(); ++i)
            wit.row({std::to_string(i), fmt(report.witness[i].real()),
                     fmt(report.witness[i].imag())});
    }
    if (!ctx.quiet && report.verdict != PdKind::pd)
        std::cerr << "positivity violation: " << verdict
                  << " (min eigenvalue " << report.min_eigenvalue << ")\n";
    return report.verdict == PdKind::pd ? 0 : 3;
}

int task_walk(TaskContext& ctx) {
    if (!ctx.kernel().complex_space)
        throw ConfigError("task walk requires a complex kernel (model disc)");
    const auto* disc = std::get_if<DiscSeries>(&ctx.kernel().complex);
    if (disc == nullptr) throw ConfigError("task walk requires kernel.model = disc");
    const int q = disc->q;
    const auto walked = dimension_walk(disc->coeffs, q);
    ctx.manifest["resolved"] = {{"q", q}};

    CsvWriter csv(ctx.out("walk.csv"), {"m", "n", "element", "walk_re", "walk_im", "extract_re",
                                        "extract_im", "abs_diff"});
    const ComplexKernelModel model{*disc};
    for (const auto& [mn, phi] : walked.entries)
        for (int u = 0; u < ctx.group.order; ++u) {
            const cplx direct = extract_coefficient_complex(model, mn.first, mn.second, q + 1, u);
            const cplx w = phi.at(u);
            csv.row({std::to_string(mn.first), std::to_string(mn.second), std::to_string(u),
                     fmt(w.real()), fmt(w.imag()), fmt(direct.real()), fmt(direct.imag()),
                     fmt(std::abs(w - direct))});
        }
    return 0;
}

int task_measure_moments(TaskContext& ctx) {
    const std::string family = need(ctx.params, "family", "params").get<std::string>();
    const int power = opt_int(ctx.params, "power", 2);
    if (power < 0) throw ConfigError("params.power must be >= 0");
    const auto& plist = need(ctx.params, "param_list", "params");
    if (!plist.is_array() || plist.empty())
        throw ConfigError("params.param_list must be a nonempty list of numbers");
    std::vector<double> parameters;
    for (const auto& p : plist) parameters.push_back(p.get<double>());
    ctx.manifest["resolved"] = {{"family", family}, {"power", power}, {"param_list", parameters}};

    std::vector<ProbeRow> rows;
    if (family == "tau") {
        rows = delta_convergence_probe_tau(
            [power](double x) { return cplx(std::pow(x, power), 0.0); }, parameters,
            power + 8);
    } else if (family == "nu") {
        rows = delta_convergence_probe_nu(
            [power](cplx z) { return cplx(std::pow(std::abs(z), power), 0.0); }, parameters,
            power + 8, 8);
    } else {
        throw ConfigError("params.family must be \"tau\" or \"nu\"");
    }
    CsvWriter csv(ctx.out("moments.csv"), {"parameter", "value_re", "value_im", "error"});
    for (const auto& r : rows)
        csv.row({fmt(r.parameter), fmt(r.integral.real()), fmt(r.integral.imag()), fmt(r.error)});
    return 0;
}

bool rodrigues_space_is_complex(const TaskContext& ctx) {
    const auto it = ctx.params.find("space");
    if (it != ctx.params.end()) {
        const std::string space = it->get<std::string>();
        if (space == "real") return false;
        if (space == "complex") return true;
        throw ConfigError("params.space must be \"real\" or \"complex\"");
    }
    if (ctx.kernel_config) return ctx.kernel_config->complex_space;
    throw ConfigError("params.space is required when no kernel is given");
}

int task_rodrigues_check(TaskContext& ctx) {
    const int cap = opt_int(ctx.params, "cap", 10);
    if (!rodrigues_space_is_complex(ctx)) {
        const auto dims = parse_dim_list(ctx.params, "d_list", 1);
        const int n_max = opt_int(ctx.params, "n_max", 6);
        std::vector<double> xs;
        for (int i = 0; i < 21; ++i) xs.push_back(-0.95 + 0.095 * i);
        ctx.manifest["resolved"] = {{"d_list", dims}, {"n_max", n_max}, {"cap", cap}};
        CsvWriter csv(ctx.out("rodrigues.csv"), {"d", "n", "deviation"});
        for (int d : dims)
            for (int n = 0; n <= n_max; ++n)
                csv.row({std::to_string(d), std::to_string(n),
                         fmt(rodrigues_check_real(d, n, xs, cap))});
        return 0;
    }
    const auto dims = parse_dim_list(ctx.params, "q_list", 2);
    const int mn_max = opt_int(ctx.params, "mn_max", 6);
    std::vector<cplx> zs;
    for (int i = 1; i <= 4; ++i)
        for (int j = 0; j < 8; ++j) zs.push_back(std::polar(0.19 * i, 2.0 * M_PI * j / 8 + 0.05));
    ctx.manifest["resolved"] = {{"q_list", dims}, {"mn_max", mn_max}, {"cap", cap}};
    CsvWriter csv(ctx.out("rodrigues.csv"), {"q", "m", "n", "deviation"});
    for (int q : dims)
        for (int m = 0; m <= mn_max; ++m)
            for (int n = 0; m + n <= mn_max; ++n)
                csv.row({std::to_string(q), std::to_string(m), std::to_string(n),
                         fmt(rodrigues_check_complex(q, m, n, zs, cap))});
    return 0;
}

} // namespace

int run_job(const std::string& config_path, const std::string& out_dir,
            std::optional<std::uint64_t> seed_override, bool quiet) {
    try {
        std::ifstream in(config_path);
        if (!in) throw ConfigError("cannot open config file " + config_path);
        json root;
        try {
            root = json::parse(in);
        } catch (const json::parse_error& e) {
            throw ConfigError(std::string("config is not valid JSON: ") + e.what());
        }

        TaskContext ctx;
        ctx.quiet = quiet;
        ctx.params = root.value("params", json::object());
        ctx.group = parse_group(root);
        if (root.contains("kernel")) ctx.kernel_config = parse_kernel(root, ctx.group);
        ctx.out_dir = out_dir;
        std::filesystem::create_directories(ctx.out_dir);
        ctx.seed = seed_override.value_or(
            static_cast<std::uint64_t>(opt_int(ctx.params, "seed", 12345)));

        const std::string task = need(root, "task", "config").get<std::string>();
        ctx.manifest["task"] = task;
        ctx.manifest["config"] = root;
        ctx.manifest["seed"] = ctx.seed;
        ctx.manifest["group_order"] = ctx.group.order;

        int code = 0;
        if (task == "limit-table")
            code = task_limit_table(ctx);
        else if (task == "extract")
            code = task_extract(ctx);
        else if (task == "evaluate")
            code = task_evaluate(ctx);
        else if (task == "check-pd")
            code = task_check_pd(ctx);
        else if (task == "walk")
            code = task_walk(ctx);
        else if (task == "measure-moments")
            code = task_measure_moments(ctx);
        else if (task == "rodrigues-check")
            code = task_rodrigues_check(ctx);
        else
            throw ConfigError("unknown task \"" + task + "\"");

        ctx.manifest["outputs"] = ctx.outputs;
        ctx.manifest["exit_code"] = code;
        std::ofstream mf(ctx.out_dir / "manifest.json", std::ios::binary);
        mf << ctx.manifest.dump(2) << "\n";
        if (!quiet) {
            for (const auto& name : ctx.outputs) std::cout << "wrote " << name << "\n";
            std::cout << "exit " << code << "\n";
        }
        return code;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    }
}

} // namespace schoenberg::job
