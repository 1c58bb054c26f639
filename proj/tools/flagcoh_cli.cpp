// Command-line front end. Talks to the library only through the C API.
#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "flagcoh/flagcoh.h"

namespace {

using nlohmann::json;

constexpr int kVerificationFailed = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string lambda, mu, family = "H", format = "json", tableau, poly;
    int d_max = 4, n_max = -1;
    bool semistandard = false, products = false, rel = false, transfer = false;
};

// Owns a string returned by the library.
class LibString {
public:
    LibString() = default;
    LibString(const LibString&) = delete;
    LibString& operator=(const LibString&) = delete;
    ~LibString() { fc_string_free(s_); }
    char** out() { return &s_; }
    std::string str() const { return s_ ? s_ : ""; }
    json parsed() const { return json::parse(str()); }

private:
    char* s_ = nullptr;
};

// FC_OK and FC_VERIFICATION_FAILED both return normally; the caller decides.
fc_status check(fc_status s) {
    if (s == FC_INVALID_ARGUMENT) throw UsageError(fc_last_error());
    if (s == FC_INTERNAL_ERROR) throw std::runtime_error(fc_last_error());
    return s;
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
    return out;
}

std::string tableau_text(const json& t) {
    std::string out;
    for (const auto& row : t.at("rows")) {
        if (!out.empty()) out += ';';
        out += join(row.get<std::vector<int>>());
    }
    return out;
}

std::string poly_text(const json& p) {
    if (p.empty()) return "0";
    std::string out;
    for (const auto& term : p) {
        if (!out.empty()) out += " + ";
        out += term.at("coeff").get<std::string>();
        const auto e = term.at("exps").get<std::vector<int>>();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            out += "*x" + std::to_string(i + 1);
            if (e[i] > 1) out += "^" + std::to_string(e[i]);
        }
    }
    return out;
}

std::string series_text(const json& h) {
    std::string out;
    for (std::size_t r = 0; r < h.size(); ++r) {
        const long c = h[r].get<long>();
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (r == 0 || c != 1) out += std::to_string(c);
        if (r > 0) out += "q^" + std::to_string(2 * r);
    }
    return out.empty() ? "0" : out;
}

void require_pair(const Options& o) {
    if (o.mu.empty() && o.lambda.empty()) return;
    if (o.mu.empty()) throw UsageError("--mu is required");
}

void print_json(const json& j) { std::cout << j.dump() << '\n'; }

int cmd_enumerate(const Options& o) {
    require_pair(o);
    if (o.format == "dot") {
        LibString dot;
        check(fc_poset(o.lambda.c_str(), o.mu.c_str(), 1, dot.out()));
        std::cout << dot.str();
        return 0;
    }
    LibString s;
    check(fc_enumerate(o.lambda.c_str(), o.mu.c_str(), o.semistandard ? 1 : 0, s.out()));
    const json tabs = s.parsed();
    if (o.format == "json") {
        print_json(tabs);
        return 0;
    }
    for (const auto& t : tabs) {
        int deg = 0;
        const std::string text = tableau_text(t);
        check(fc_tableau_degree(o.mu.c_str(), text.c_str(), &deg));
        std::cout << text << "\tdeg " << deg << '\n';
    }
    std::cout << tabs.size() << " tableaux\n";
    return 0;
}

int cmd_degree(const Options& o) {
    if (o.tableau.empty()) throw UsageError("--tableau is required");
    require_pair(o);
    int deg = 0;
    check(fc_tableau_degree(o.mu.c_str(), o.tableau.c_str(), &deg));
    LibString red;
    check(fc_reduce_tableau(o.mu.c_str(), o.tableau.c_str(), red.out()));
    const json r = red.parsed();
    if (!o.lambda.empty()) {
        std::vector<int> shape = r.at("shape").get<std::vector<int>>();
        std::vector<int> lam;
        std::stringstream ss(o.lambda);
        for (std::string item; std::getline(ss, item, ',');)
            if (item.find_first_not_of(" 0") != std::string::npos) lam.push_back(std::stoi(item));
        if (shape != lam) throw UsageError("tableau does not have shape " + o.lambda);
    }
    if (o.format == "json") {
        json out = r;
        out["degree"] = deg;
        print_json(out);
    } else {
        std::cout << deg << '\n';
    }
    return 0;
}

int cmd_basis(const Options& o) {
    require_pair(o);
    fc_quotient* raw = nullptr;
    check(fc_quotient_build(o.lambda.c_str(), o.mu.c_str(), o.family == "E" ? FC_FAMILY_E : FC_FAMILY_H, &raw));
    std::unique_ptr<fc_quotient, void (*)(fc_quotient*)> q(raw, fc_quotient_free);
    LibString report;
    if (check(fc_quotient_certify(q.get(), report.out())) == FC_VERIFICATION_FAILED) {
        std::cout << report.parsed().dump(2) << '\n';
        std::cerr << "verification failed: " << fc_last_error() << '\n';
        return kVerificationFailed;
    }
    const json rep = report.parsed();
    json out = json::array();
    for (const auto& t : rep.at("basis")) {
        const std::string text = tableau_text(t);
        int deg = 0;
        check(fc_tableau_degree(o.mu.c_str(), text.c_str(), &deg));
        LibString h;
        check(fc_h_of_tableau(o.mu.c_str(), text.c_str(), h.out()));
        out.push_back({{"tableau", t}, {"degree", 2 * deg}, {"h", h.parsed()}});
    }
    json result = {{"lambda", rep.at("lambda")}, {"mu", rep.at("mu")}, {"basis", out}};
    if (!o.poly.empty()) {
        LibString nf;
        check(fc_quotient_normal_form(q.get(), o.poly.c_str(), nf.out()));
        result["normal_form"] = nf.parsed();
    }
    if (o.products) {
        LibString sc;
        check(fc_quotient_structure_constants(q.get(), sc.out()));
        result["structure_constants"] = sc.parsed();
    }
    if (o.format == "json") {
        print_json(result);
        return 0;
    }
    for (const auto& b : out)
        std::cout << tableau_text(b.at("tableau")) << "\tdeg " << b.at("degree").get<int>() << "\th(T) = "
                  << poly_text(b.at("h")) << '\n';
    if (result.contains("normal_form")) {
        std::cout << "normal form:";
        for (const auto& c : result["normal_form"]) std::cout << ' ' << c.get<std::string>();
        std::cout << '\n';
    }
    if (result.contains("structure_constants"))
        std::cout << "structure constants integral: " << result["structure_constants"]["integral"] << '\n';
    return 0;
}

int cmd_present(const Options& o) {
    require_pair(o);
    fc_quotient* raw = nullptr;
    check(fc_quotient_build(o.lambda.c_str(), o.mu.c_str(), o.family == "E" ? FC_FAMILY_E : FC_FAMILY_H, &raw));
    std::unique_ptr<fc_quotient, void (*)(fc_quotient*)> q(raw, fc_quotient_free);
    LibString report;
    const bool failed = check(fc_quotient_certify(q.get(), report.out())) == FC_VERIFICATION_FAILED;
    const json rep = report.parsed();
    if (o.format == "json") {
        print_json(rep);
    } else {
        std::cout << "lambda  " << join(rep.at("lambda").get<std::vector<int>>()) << '\n'
                  << "mu      " << join(rep.at("mu").get<std::vector<int>>()) << '\n'
                  << "family  " << rep.at("family").get<std::string>() << '\n'
                  << "hilbert " << series_text(rep.at("hilbert")) << '\n'
                  << "basis   " << rep.at("basis").size() << " tableaux, certified "
                  << (rep.at("certified").get<bool>() ? "yes" : "no") << '\n';
        LibString gens;
        check(fc_quotient_generators(q.get(), gens.out()));
        for (const auto& g : gens.parsed())
            std::cout << "  " << o.family << "_" << g.at("r").get<int>() << "(" << join(g.at("blocks"))
                      << ") = " << poly_text(g.at("poly")) << '\n';
    }
    if (failed) {
        std::cerr << "verification failed: " << fc_last_error() << '\n';
        return kVerificationFailed;
    }
    return 0;
}

int cmd_hilbert(const Options& o) {
    require_pair(o);
    fc_quotient* raw = nullptr;
    check(fc_quotient_build(o.lambda.c_str(), o.mu.c_str(), o.family == "E" ? FC_FAMILY_E : FC_FAMILY_H, &raw));
    std::unique_ptr<fc_quotient, void (*)(fc_quotient*)> q(raw, fc_quotient_free);
    LibString h, b;
    check(fc_quotient_hilbert(q.get(), h.out()));
    check(fc_betti(o.lambda.c_str(), o.mu.c_str(), b.out()));
    const json out = {{"hilbert", h.parsed()}, {"betti", b.parsed()}};
    if (o.format == "json") print_json(out);
    else
        std::cout << "hilbert " << series_text(out["hilbert"]) << "\nbetti   " << series_text(out["betti"]) << '\n';
    return out["hilbert"] == out["betti"] ? 0 : kVerificationFailed;
}

int cmd_verify(const Options& o) {
    require_pair(o);
    LibString s;
    const bool failed = check(fc_verify(o.lambda.c_str(), o.mu.c_str(), s.out())) == FC_VERIFICATION_FAILED;
    const json rep = s.parsed();
    if (o.format == "json") print_json(rep);
    else
        std::cout << "certified " << rep["certified"] << "\nrel_equivalence " << rep["rel_equivalence"]
                  << "\nbetti_matches_hilbert " << rep["betti_matches_hilbert"] << "\npassed " << rep["passed"]
                  << '\n';
    return failed ? kVerificationFailed : 0;
}

int cmd_components(const Options& o) {
    require_pair(o);
    if (o.format == "dot") {
        LibString dot;
        check(fc_poset(o.lambda.c_str(), o.mu.c_str(), 1, dot.out()));
        std::cout << dot.str();
        return 0;
    }
    LibString s;
    check(fc_components(o.lambda.c_str(), o.mu.c_str(), s.out()));
    const json comps = s.parsed();
    if (o.format == "json") {
        print_json(comps);
    } else {
        for (const auto& c : comps)
            std::cout << tableau_text(c.at("top")) << "\tdim " << c.at("dimension") << "\tfiber "
                      << c.at("fiber").size() << "\tmaximal " << c.at("unique_maximal") << '\n';
    }
    for (const auto& c : comps)
        if (!c.at("unique_maximal").get<bool>()) return kVerificationFailed;
    return 0;
}

int cmd_transfer(const Options& o) {
    require_pair(o);
    LibString s;
    const bool failed = check(fc_transfer(o.lambda.c_str(), o.mu.c_str(), s.out())) == FC_VERIFICATION_FAILED;
    const json rep = s.parsed();
    if (o.format == "json") {
        print_json(rep);
    } else {
        std::cout << "shift " << rep["shift"] << "  passed " << rep["passed"] << '\n';
        for (const auto& d : rep["degrees"])
            std::cout << "  degree " << d["degree"] << ": quotient " << d["quotient_dim"] << ", anti-invariant "
                      << d["anti_invariant_dim"] << ", image " << d["image_rank"] << '\n';
    }
    if (failed) std::cerr << "verification failed: " << fc_last_error() << '\n';
    return failed ? kVerificationFailed : 0;
}

std::vector<std::vector<int>> partitions_of(int d, int parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            std::vector<int> p = cur;
            p.resize(parts, 0);
            out.push_back(p);
            return;
        }
        if (static_cast<int>(cur.size()) == parts) return;
        for (int k = std::min(left, cap); k >= 1; --k) {
            cur.push_back(k);
            rec(left - k, k);
            cur.pop_back();
        }
    };
    rec(d, d);
    return out;
}

std::vector<std::vector<int>> compositions_of(int d, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(n, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n) {
            if (left == 0) out.push_back(cur);
            return;
        }
        if (i + 1 == n) {
            cur[i] = left;
            rec(i + 1, 0);
            return;
        }
        for (int k = left; k >= 0; --k) {
            cur[i] = k;
            rec(i + 1, left - k);
        }
    };
    rec(0, d);
    return out;
}

int cmd_sweep(const Options& o) {
    if (o.d_max < 0) throw UsageError("--d-max must be non-negative");
    bool failed = false;
    for (int d = 0; d <= o.d_max; ++d) {
        const int n_hi = o.n_max < 0 ? d : std::min(d, o.n_max);
        for (int n = d == 0 ? 0 : 1; n <= n_hi; ++n)
            for (const auto& l : partitions_of(d, n))
                for (const auto& m : compositions_of(d, n)) {
                    const std::string ls = join(l), ms = join(m);
                    LibString s;
                    bool ok = check(fc_verify(ls.c_str(), ms.c_str(), s.out())) == FC_OK;
                    json line = s.parsed();
                    line.erase("witness");
                    if (o.transfer) {
                        LibString t;
                        const bool t_ok = check(fc_transfer(ls.c_str(), ms.c_str(), t.out())) == FC_OK;
                        line["transfer"] = t_ok;
                        ok = ok && t_ok;
                    }
                    line["passed"] = ok;
                    failed = failed || !ok;
                    std::cout << line.dump() << '\n';
                }
    }
    return failed ? kVerificationFailed : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cohomology presentations of Spaltenstein varieties"};
    app.require_subcommand(1);
    Options o;

    auto add_pair = [&](CLI::App* sub) {
        sub->add_option("--lambda", o.lambda, "partition, comma separated (e.g. 4,3,3,2)");
        sub->add_option("--mu", o.mu, "composition, comma separated (e.g. 1,4,1,3,1,2)");
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "table", "dot"}));
    };
    auto add_family = [&](CLI::App* sub) {
        sub->add_option("--family", o.family, "generator family")->check(CLI::IsMember({"H", "E"}));
    };

    auto* enumerate = app.add_subcommand("enumerate", "list column-strict tableaux");
    add_pair(enumerate);
    enumerate->add_flag("--semistandard", o.semistandard, "only semi-standard tableaux");
    auto* degree = app.add_subcommand("degree", "degree and reduction of one tableau");
    add_pair(degree);
    degree->add_option("--tableau", o.tableau, "rows separated by ';' (e.g. 2,1,2,2;3,2,4;4,4,6;6,5)");
    auto* basis = app.add_subcommand("basis", "certified h(T) basis");
    add_pair(basis);
    add_family(basis);
    basis->add_option("--poly", o.poly, "invariant polynomial to express in the basis");
    basis->add_flag("--products", o.products, "include structure constants");
    auto* present = app.add_subcommand("present", "presentation report");
    add_pair(present);
    add_family(present);
    auto* hilbert = app.add_subcommand("hilbert", "Hilbert series and Betti numbers");
    add_pair(hilbert);
    add_family(hilbert);
    auto* verify = app.add_subcommand("verify", "basis, family equivalence and Betti checks");
    add_pair(verify);
    auto* comps = app.add_subcommand("components", "irreducible components and fibers");
    add_pair(comps);
    auto* transfer = app.add_subcommand("transfer", "anti-invariant transfer check");
    add_pair(transfer);
    auto* sweep = app.add_subcommand("sweep", "verify every pair up to the bounds, one JSON line each");
    sweep->add_option("--d-max", o.d_max, "largest d");
    sweep->add_option("--n-max", o.n_max, "largest number of parts (default d)");
    sweep->add_flag("--transfer", o.transfer, "also run the transfer check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        if (*enumerate) return cmd_enumerate(o);
        if (*degree) return cmd_degree(o);
        if (*basis) return cmd_basis(o);
        if (*present) return cmd_present(o);
        if (*hilbert) return cmd_hilbert(o);
        if (*verify) return cmd_verify(o);
        if (*comps) return cmd_components(o);
        if (*transfer) return cmd_transfer(o);
        if (*sweep) return cmd_sweep(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return kUsageError;
}
