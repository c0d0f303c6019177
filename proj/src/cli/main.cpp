#include <lvmb/lvmb.h>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitInputError = 2;

struct Options {
    std::string format = "text";
    std::uint64_t seed = 0;
    std::uint64_t max_trials = 0;  // 0 keeps the library default
    std::string mode = "general";
};

int strict_flag(const Options& opt) { return opt.mode == "strict" ? 1 : 0; }

// Frees the strings a library call hands back when the scope closes.
struct Out {
    char* report = nullptr;
    char* err = nullptr;
    ~Out() {
        lvmb_string_free(report);
        lvmb_string_free(err);
    }
};

struct SysHandle {
    lvmb_system* ptr = nullptr;
    ~SysHandle() { lvmb_system_free(ptr); }
};

int fail_input(const char* err) {
    std::cerr << "error: " << (err ? err : "invalid input") << "\n";
    return kExitInputError;
}

int load(const std::string& path, SysHandle& sys) {
    char* err = nullptr;
    sys.ptr = lvmb_system_load_file(path.c_str(), &err);
    if (!sys.ptr) {
        int code = fail_input(err);
        lvmb_string_free(err);
        return code;
    }
    return 0;
}

void print_value(const Json& v, const std::string& indent);

bool scalar_array(const Json& v) {
    for (const auto& e : v)
        if (e.is_structured()) return false;
    return true;
}

std::string scalar_text(const Json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
}

void print_object(const Json& v, const std::string& indent) {
    for (auto it = v.begin(); it != v.end(); ++it) {
        std::cout << indent << it.key() << ":";
        const Json& val = it.value();
        if (val.is_structured() && !(val.is_array() && scalar_array(val))) {
            std::cout << "\n";
            print_value(val, indent + "  ");
        } else {
            std::cout << " ";
            print_value(val, "");
        }
    }
}

void print_value(const Json& v, const std::string& indent) {
    if (v.is_object()) {
        print_object(v, indent);
    } else if (v.is_array() && !scalar_array(v)) {
        for (const auto& e : v) {
            if (e.is_structured() && !(e.is_array() && scalar_array(e))) {
                std::cout << indent << "-\n";
                print_value(e, indent + "  ");
            } else {
                std::cout << indent << "- ";
                print_value(e, "");
            }
        }
    } else if (v.is_array()) {
        std::cout << "[";
        for (size_t i = 0; i < v.size(); ++i)
            std::cout << (i ? ", " : "") << scalar_text(v[i]);
        std::cout << "]\n";
    } else {
        std::cout << scalar_text(v) << "\n";
    }
}

int finish(int status, const Options& opt, const Out& out) {
    if (status == LVMB_INPUT_ERROR) return fail_input(out.err);
    if (out.report) {
        if (opt.format == "json")
            std::cout << out.report;
        else
            print_value(Json::parse(out.report), "");
    }
    return status;
}

std::optional<std::vector<long>> parse_basis(const std::string& text) {
    std::vector<long> entries;
    std::stringstream rows(text);
    std::string row;
    while (std::getline(rows, row, ';')) {
        std::stringstream cells(row);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            try {
                size_t used = 0;
                entries.push_back(std::stol(cell, &used));
                if (used != cell.size()) return std::nullopt;
            } catch (const std::exception&) {
                return std::nullopt;
            }
        }
    }
    if (entries.empty()) return std::nullopt;
    return entries;
}

int cmd_check(const std::string& path, const Options& opt) {
    SysHandle sys;
    if (int code = load(path, sys)) return code;
    Out out;
    return finish(lvmb_check(sys.ptr, &out.report, &out.err), opt, out);
}

int cmd_classify(const std::string& path, const Options& opt) {
    SysHandle sys;
    if (int code = load(path, sys)) return code;
    Out out;
    return finish(lvmb_classify(sys.ptr, &out.report, &out.err), opt, out);
}

int cmd_cond_h(const std::string& path, const std::string& basis_text,
               const Options& opt) {
    SysHandle sys;
    if (int code = load(path, sys)) return code;
    std::optional<std::vector<long>> basis;
    if (!basis_text.empty()) {
        basis = parse_basis(basis_text);
        if (!basis)
            return fail_input("bad basis: expected rows like \"a,b;c,d\"");
    }
    Out out;
    return finish(lvmb_cond_h(sys.ptr, basis ? basis->data() : nullptr,
                              basis ? basis->size() : 0, strict_flag(opt),
                              &out.report, &out.err),
                  opt, out);
}

int cmd_lvm(const std::string& path, long max_attempts, bool necessary_only,
            const Options& opt) {
    SysHandle sys;
    if (int code = load(path, sys)) return code;
    Out out;
    return finish(lvmb_lvm(sys.ptr, opt.seed, static_cast<int>(max_attempts),
                           necessary_only ? 1 : 0, &out.report, &out.err),
                  opt, out);
}

int cmd_mine_good(const std::string& eps_path, const std::string& out_path,
                  const Options& opt) {
    SysHandle sys;
    if (int code = load(eps_path, sys)) return code;
    char* found = nullptr;
    Out out;
    int status = lvmb_mine_good_system(sys.ptr, opt.seed, opt.max_trials, &found,
                                       &out.report, &out.err);
    if (status == LVMB_OK && found) {
        if (!out_path.empty()) {
            std::ofstream file(out_path);
            if (!file) {
                lvmb_string_free(found);
                return fail_input(("cannot write " + out_path).c_str());
            }
            file << found;
        }
        Json report = Json::parse(out.report);
        report["document"] = Json::parse(found);
        if (!out_path.empty()) report["written_to"] = out_path;
        lvmb_string_free(out.report);
        out.report = nullptr;
        std::string text = report.dump(2) + "\n";
        if (opt.format == "json")
            std::cout << text;
        else
            print_value(report, "");
        lvmb_string_free(found);
        return status;
    }
    lvmb_string_free(found);
    return finish(status, opt, out);
}

int cmd_mine_basis(const std::string& path, const Options& opt) {
    SysHandle sys;
    if (int code = load(path, sys)) return code;
    Out out;
    return finish(lvmb_mine_basis(sys.ptr, opt.seed, opt.max_trials,
                                  strict_flag(opt), &out.report, &out.err),
                  opt, out);
}

int cmd_homotopy(const std::string& path_a, const std::string& path_b, long steps,
                 const Options& opt) {
    SysHandle a;
    if (int code = load(path_a, a)) return code;
    SysHandle b;
    if (int code = load(path_b, b)) return code;
    Out out;
    return finish(lvmb_homotopy(a.ptr, b.ptr, steps, &out.report, &out.err), opt,
                  out);
}

std::string check_summary(const Json& checks) {
    std::string line;
    for (const auto& c : checks) {
        if (!line.empty()) line += "  ";
        line += c["field"].get<std::string>() + "=" + scalar_text(c["got"]);
        if (c["ok"] != true)
            line += " (expected " + scalar_text(c["expected"]) + ")";
    }
    return line;
}

int cmd_fixtures(const Options& opt) {
    Json all = Json::array();
    bool ok = true;
    for (size_t i = 0; i < lvmb_fixture_count(); ++i) {
        Out out;
        int status = lvmb_fixture_run(lvmb_fixture_name(i), &out.report, &out.err);
        if (status == LVMB_INPUT_ERROR) return fail_input(out.err);
        ok = ok && status == LVMB_OK;
        all.push_back(Json::parse(out.report));
    }
    if (opt.format == "json") {
        Json summary;
        summary["ok"] = ok;
        summary["fixtures"] = all;
        std::cout << summary.dump(2) + "\n";
    } else {
        for (const auto& f : all)
            std::cout << (f["ok"] == true ? "pass" : "FAIL") << "  "
                      << f["name"].get<std::string>() << "  "
                      << check_summary(f["checks"]) << "\n";
        std::cout << (ok ? "all fixtures pass" : "some fixtures FAILED") << "\n";
    }
    return ok ? LVMB_OK : LVMB_NEGATIVE;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Good-system toolkit for LVMB data: verification, "
                 "classification, condition (H), LVM-type recognition, and "
                 "seeded searches"};
    app.set_version_flag("--version", lvmb_version());
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "Random seed for seeded commands")
        ->capture_default_str();
    app.add_option("--max-trials", opt.max_trials,
                   "Trial budget for mining commands (0 = default)");
    app.add_option("--mode", opt.mode, "Basis determinant rule")
        ->check(CLI::IsMember({"strict", "general"}))
        ->capture_default_str();

    std::string path, path_b, basis_text, eps_path, out_path;
    long steps = 11;
    long max_attempts = -1;
    bool necessary_only = false;

    auto* check = app.add_subcommand("check", "Verify the good-system axioms");
    check->add_option("document", path, "System document")->required();

    auto* classify = app.add_subcommand("classify", "Classify the quotient manifold");
    classify->add_option("document", path, "System document")->required();

    auto* cond_h = app.add_subcommand("cond-h", "Evaluate condition (H) for a basis");
    cond_h->add_option("document", path, "System document")->required();
    cond_h->add_option("--basis", basis_text,
                       "Inline basis rows, e.g. \"0,-2;1,0\" (default: stored)");

    auto* lvm = app.add_subcommand("lvm", "Recognize LVM-type data");
    lvm->add_option("document", path, "System document")->required();
    lvm->add_option("--max-attempts", max_attempts,
                    "Witness sampling budget (-1 = default)");
    lvm->add_flag("--necessary-only", necessary_only,
                  "Run only the subfamily intersection scan");

    auto* mine = app.add_subcommand("mine", "Seeded searches");
    mine->require_subcommand(1);
    mine->fallthrough();
    auto* mine_good = mine->add_subcommand("good-system",
                                           "Search for a configuration making a "
                                           "fundamental set good");
    mine_good->add_option("--epsilon", eps_path,
                          "Document providing the fundamental set")
        ->required();
    mine_good->add_option("--out", out_path, "Write the mined document here");
    auto* mine_basis = mine->add_subcommand("basis",
                                            "Search for a basis satisfying "
                                            "condition (H)");
    mine_basis->add_option("document", path, "System document")->required();

    auto* homotopy = app.add_subcommand("homotopy",
                                        "Scan the straight segment between two "
                                        "configurations");
    homotopy->add_option("document_a", path, "First endpoint")->required();
    homotopy->add_option("document_b", path_b, "Second endpoint")->required();
    homotopy->add_option("--steps", steps, "Sample count")->capture_default_str();

    auto* fixtures = app.add_subcommand("fixtures",
                                        "Run every bundled example against its "
                                        "pinned expectations");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitInputError;
    }

    if (check->parsed()) return cmd_check(path, opt);
    if (classify->parsed()) return cmd_classify(path, opt);
    if (cond_h->parsed()) return cmd_cond_h(path, basis_text, opt);
    if (lvm->parsed()) return cmd_lvm(path, max_attempts, necessary_only, opt);
    if (mine->parsed()) {
        if (mine_good->parsed()) return cmd_mine_good(eps_path, out_path, opt);
        if (mine_basis->parsed()) return cmd_mine_basis(path, opt);
    }
    if (homotopy->parsed()) return cmd_homotopy(path, path_b, steps, opt);
    if (fixtures->parsed()) return cmd_fixtures(opt);
    return kExitInputError;
}
