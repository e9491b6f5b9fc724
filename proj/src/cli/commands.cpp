#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "nw/biquadratic_witness.hpp"
#include "nw/cli.hpp"
#include "nw/cyclotomic_witness.hpp"
#include "nw/error.hpp"

namespace nw::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string format = "json";
    std::string out_path;
    std::optional<std::uint64_t> budget;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--out", c.out_path, "Write the report to this file");
}

SearchBudget resolve_budget(const Common& c) {
    SearchBudget b;
    if (c.budget) {
        b.max_candidates = *c.budget;
    } else if (const char* env = std::getenv("NW_BUDGET"); env && *env) {
        try {
            std::size_t pos = 0;
            const unsigned long long v = std::stoull(env, &pos);
            if (pos != std::string(env).size()) throw std::invalid_argument("trailing characters");
            b.max_candidates = v;
        } catch (const std::exception&) {
            throw UsageError(std::string("NW_BUDGET is not a non-negative integer: '") + env + "'");
        }
    }
    if (b.max_candidates == 0) throw UsageError("search budget must be positive");
    return b;
}

Integer parse_prime_arg(const std::string& text) {
    Integer p;
    if (text.empty() || p.set_str(text, 10) != 0) throw UsageError("--p must be a decimal integer, got '" + text + "'");
    return p;
}

int emit(const Json& report, const Common& c, std::ostream& out, std::ostream& err) {
    const std::string body = c.format == "text" ? render_text(report) : report.dump(2) + "\n";
    if (c.out_path.empty()) {
        out << body;
    } else {
        std::ofstream f(c.out_path, std::ios::binary);
        if (!f || !(f << body)) {
            err << "error: cannot write " << c.out_path << "\n";
            return kExitData;
        }
    }
    return all_checks_pass(report) ? kExitPass : kExitCheckFail;
}

Json check_profile_payload(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw DataError(path + ": cannot open file");
    std::stringstream ss;
    ss << f.rdbuf();
    Json doc;
    try {
        doc = Json::parse(ss.str());
    } catch (const Json::parse_error& e) {
        throw DataError(path + ": byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (!doc.is_object()) throw DataError(path + ": top level must be an object");
    InvariantProfile profile;
    std::optional<LocalExtensionData> ext;
    try {
        profile = InvariantProfile::from_json(doc);
        if (doc.contains("extension")) ext = LocalExtensionData::from_json(profile.base(), doc["extension"]);
    } catch (const DataError& e) {
        throw DataError(path + ": " + e.what());
    }

    QZClass sum;
    bool real_ok = true;
    for (const auto& [place, inv] : profile.entries()) {
        sum = qz_add(sum, inv);
        if (place.is_real() && !(inv == qz_make(Rational(1, 2)))) real_ok = false;
    }
    const bool valid = profile_is_valid(profile);
    CheckReport checks;
    checks.add("invariants sum to zero in Q/Z", sum.is_zero(), "sum of local invariants = " + sum.str());
    checks.add("real invariants in {0, 1/2}", real_ok, "local invariants at real places must have order dividing 2");
    checks.add("profile valid", valid, "a profile is realized by a central simple algebra iff it sums to zero");

    Json payload;
    payload["profile"] = profile.to_json();
    payload["valid"] = valid;
    payload["degree"] = valid ? Json(to_string(profile_degree(profile))) : Json(nullptr);
    if (ext && valid && profile_degree(profile) % ext->base_degree() != 0) {
        payload["containment"] = Json{{"k", ext->base_degree()},
                                      {"contained", false},
                                      {"reason", "k does not divide the degree " + to_string(profile_degree(profile))}};
    } else if (ext && valid) {
        ContainmentVerdict v;
        try {
            v = contains_subfield(profile, *ext, ext->base_degree());
        } catch (const PreconditionError& e) {
            throw DataError(path + ": /extension: " + e.what());
        }
        Json extended = Json::array();
        for (const auto& x : v.extended)
            extended.push_back(Json{{"below", x.below.str()},
                                    {"index", x.index},
                                    {"e", x.degree.e},
                                    {"f", x.degree.f},
                                    {"inv", x.inv.str()}});
        payload["containment"] = Json{{"k", ext->base_degree()},
                                      {"contained", v.contained},
                                      {"lcm_of_orders", to_string(v.lcm_of_orders)},
                                      {"extended", extended}};
    }
    payload["checks"] = checks.to_json();
    return payload;
}

}  // namespace

Json make_report(const std::string& kind, Json payload) {
    return Json{{"kind", kind}, {"version", "v1"}, {"payload", std::move(payload)}};
}

bool all_checks_pass(const Json& j) {
    if (j.is_object()) {
        if (auto it = j.find("pass"); it != j.end() && it->is_boolean() && !it->get<bool>()) return false;
        for (const auto& [k, v] : j.items())
            if (!all_checks_pass(v)) return false;
    } else if (j.is_array()) {
        for (const auto& v : j)
            if (!all_checks_pass(v)) return false;
    }
    return true;
}

namespace {

bool is_check(const Json& j) { return j.is_object() && j.contains("name") && j.contains("pass"); }

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render(const Json& j, const std::string& indent, std::string& out) {
    for (const auto& [k, v] : j.items()) {
        if (v.is_object()) {
            out += indent + k + ":\n";
            render(v, indent + "  ", out);
        } else if (v.is_array() && !v.empty() && is_check(v.front())) {
            out += indent + k + ":\n";
            for (const auto& c : v)
                out += indent + "  [" + (c["pass"].get<bool>() ? "PASS" : "FAIL") + "] " +
                       c["name"].get<std::string>() + " : " + scalar_text(c.value("detail", Json(""))) + "\n";
        } else if (v.is_array() && !v.empty() && v.front().is_object()) {
            out += indent + k + ":\n";
            for (std::size_t i = 0; i < v.size(); ++i) {
                out += indent + "  - [" + std::to_string(i) + "]\n";
                render(v[i], indent + "    ", out);
            }
        } else {
            out += indent + k + ": " + scalar_text(v) + "\n";
        }
    }
}

}  // namespace

std::string render_text(const Json& report) {
    std::string out = "kind: " + scalar_text(report.at("kind")) + " (schema " + scalar_text(report.at("version")) + ")\n";
    render(report.at("payload"), "", out);
    out += std::string("result: ") + (all_checks_pass(report) ? "all checks pass" : "CHECK FAILURE") + "\n";
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Noncrossed product witness toolkit", "nw"};
    app.require_subcommand(1);

    Common common;
    std::uint64_t budget_value = 0;
    auto add_budget = [&](CLI::App* cmd) {
        cmd->add_option("--budget", budget_value, "Maximum number of search candidates")->check(CLI::PositiveNumber);
    };

    auto* witness = app.add_subcommand("witness", "Build and verify a noncrossed-product witness");
    witness->require_subcommand(1);
    std::string p_text;
    auto* psq = witness->add_subcommand("psq", "Degree p^2 witness over Q((x))");
    psq->add_option("--p", p_text, "Odd prime p")->required();
    add_common(psq, common);
    add_budget(psq);
    auto* deg8 = witness->add_subcommand("deg8", "Degree 8 witness over F_p(t)((x))((y))");
    deg8->add_option("--p", p_text, "Prime p = 3 mod 8")->required();
    add_common(deg8, common);
    add_budget(deg8);

    MnDemoOptions demo;
    auto* mn = app.add_subcommand("mn-demo", "Mal'cev-Neumann ring demonstration");
    mn->add_option("--samples", demo.samples, "Random cases per context")->check(CLI::PositiveNumber);
    mn->add_option("--seed", demo.seed, "Seed for the random cases");
    add_common(mn, common);

    std::string profile_path;
    auto* check = app.add_subcommand("check-profile", "Validate an invariant profile JSON file");
    check->add_option("path", profile_path, "Profile JSON file")->required();
    add_common(check, common);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
    for (auto* cmd : {psq, deg8})
        if (cmd->parsed() && cmd->count("--budget")) common.budget = budget_value;

    try {
        if (psq->parsed()) {
            const Integer p = parse_prime_arg(p_text);
            if (p < 3 || !is_prime(p)) throw UsageError("witness psq needs an odd prime p, got " + p_text);
            const PsqWitness w = build_psq_witness(p, resolve_budget(common));
            return emit(make_report("psq", w.to_json()), common, out, err);
        }
        if (deg8->parsed()) {
            const Integer p = parse_prime_arg(p_text);
            if (p < 3 || !p.fits_ulong_p() || !is_prime(p) || mod_floor(p, 8) != 3)
                throw UsageError("witness deg8 needs a prime p = 3 mod 8 (so that 2 and -1 are nonsquares mod p), got " +
                                 p_text);
            resolve_budget(common);
            const Deg8Witness w = build_deg8_witness(p.get_ui());
            return emit(make_report("deg8", w.to_json()), common, out, err);
        }
        if (mn->parsed()) return emit(make_report("mn-demo", mn_demo_payload(demo)), common, out, err);
        if (check->parsed()) return emit(make_report("profile-check", check_profile_payload(profile_path)), common, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SearchBudgetExceeded& e) {
        err << "search exhausted: " << e.what() << "\n";
        return kExitSearchExhausted;
    } catch (const DataError& e) {
        err << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const PreconditionError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "usage error: no command\n";
    return kExitUsage;
}

}  // namespace nw::cli
