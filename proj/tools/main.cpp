#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclotome/charsum.hpp"
#include "cyclotome/codes.hpp"
#include "cyclotome/verify.hpp"

namespace {

using namespace cyclotome;

struct Options {
    std::int64_t p = 0;
    int m = 0;
    int k = 1;
    std::string prim_poly;
    std::string method = "all";
    std::string format = "text";
    std::string output;
    std::uint64_t seed = 1;
    std::size_t threads = 0;
};

FpPoly parse_poly(const std::string& text, std::int64_t p) {
    std::vector<std::int64_t> coeffs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) coeffs.push_back(std::stoll(item));
    return make_poly(std::move(coeffs), p);
}

FieldCtx make_ctx(const Options& opt) {
    FieldParams params{opt.p, opt.m, opt.k, {}};
    if (!opt.prim_poly.empty()) params.prim_poly = parse_poly(opt.prim_poly, opt.p);
    return build_field(params);
}

void emit(const Options& opt, const std::string& text) {
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + opt.output);
    out << text;
}

int cmd_field(const Options& opt) {
    FieldCtx ctx = make_ctx(opt);
    CyclicCodeSpec code = build_code(ctx);
    std::ostringstream os;
    os << "p = " << ctx.p() << ", m = " << ctx.m() << ", k = " << ctx.k() << "\n";
    os << "q = " << ctx.q() << ", n = " << code.n << ", dim = " << code.dim << "\n";
    os << "primitive polynomial: " << to_string(ctx.prim_poly()) << "  coeffs "
       << poly_to_json(ctx.prim_poly()) << "\n";
    os << "lambda = " << ctx.lambda() << "\n";
    os << "h0 = " << to_string(code.h0) << "  (deg " << code.h0.degree() << ")\n";
    os << "h1 = " << to_string(code.h1) << "  (deg " << code.h1.degree() << ")\n";
    os << "h2 = " << to_string(code.h2) << "  (deg " << code.h2.degree() << ")\n";
    os << "pairwise distinct: "
       << (code.h0 != code.h1 && code.h1 != code.h2 && code.h0 != code.h2 ? "yes" : "no") << "\n";
    os << "h = h0*h1*h2 = " << to_string(code.h) << "  (deg " << code.h.degree() << ")\n";
    emit(opt, os.str());
    return 0;
}

std::string dist_text(const Options& opt, const WeightDist& d) {
    std::ostringstream os;
    os << "[n, dim] = [" << d.n << ", " << d.dim << "], p=" << opt.p << " m=" << opt.m
       << " k=" << opt.k << "\n";
    os << "weight,frequency\n";
    for (const auto& [w, f] : d.entries) os << w << "," << f << "\n";
    os << "enumerator: " << enumerator_string(d) << "\n";
    return os.str();
}

int cmd_weights(const Options& opt) {
    FieldCtx ctx = make_ctx(opt);
    CyclicCodeSpec code = build_code(ctx);

    std::map<std::string, WeightDist> dists;
    if (opt.method == "bruteforce" || opt.method == "all") {
        const unsigned __int128 labels =
            static_cast<unsigned __int128>(ctx.q()) * ctx.q() * ctx.q();
        if (labels > (std::uint64_t{1} << 26)) {
            if (opt.method == "bruteforce")
                throw ParamError(Errc::TooLarge, "p^{3m} exceeds the 2^26 enumeration guard");
            std::cerr << "note: bruteforce skipped, p^{3m} exceeds the 2^26 guard\n";
        } else {
            dists["bruteforce"] = weight_dist_bruteforce(code, opt.threads);
        }
    }
    if (opt.method == "charsum" || opt.method == "all")
        dists["charsum"] = weight_dist_charsum(code, opt.threads);
    if (opt.method == "closedform" || opt.method == "all")
        dists["closedform"] = weight_dist_closed_form(code);

    const WeightDist& first = dists.begin()->second;
    bool agree = true;
    for (const auto& [name, d] : dists) agree = agree && d == first;
    if (!agree) {
        std::cerr << "method disagreement:\n";
        for (const auto& [name, d] : dists)
            std::cerr << "  " << name << ": " << enumerator_string(d) << "\n";
        return 3;
    }

    std::ostringstream os;
    if (opt.format == "json") {
        if (dists.size() == 1) {
            os << dist_to_json(first) << "\n";
        } else {
            nlohmann::json j;
            j["agreement"] = true;
            for (const auto& [name, d] : dists)
                j["methods"][name] = nlohmann::json::parse(dist_to_json(d));
            os << j.dump(2) << "\n";
        }
    } else if (opt.format == "csv") {
        os << dist_to_csv(first);
    } else {
        os << dist_text(opt, first);
        if (dists.size() > 1) {
            os << "methods:";
            for (const auto& [name, d] : dists) os << " " << name;
            os << "\nagreement: OK\n";
        }
    }
    emit(opt, os.str());
    return 0;
}

int cmd_verify(const Options& opt) {
    auto results = run_verification(opt.seed, opt.threads);
    std::size_t pass = 0, warn = 0, fail = 0;
    std::ostringstream os;
    for (const auto& r : results) {
        const char* status = r.pass ? (r.warn ? "WARN" : "PASS") : "FAIL";
        if (!r.pass)
            ++fail;
        else if (r.warn)
            ++warn;
        else
            ++pass;
        os << status << "  " << r.name;
        if (!r.detail.empty()) os << "\n      " << r.detail;
        os << "\n";
    }
    os << results.size() << " checks: " << pass << " PASS, " << warn << " WARN, " << fail
       << " FAIL\n";
    emit(opt, os.str());
    return fail == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"six-weight cyclic codes: construction, weight distributions, verification"};
    app.require_subcommand(1);
    Options opt;

    auto add_field_opts = [&](CLI::App* sub, bool require_pmk) {
        auto* p = sub->add_option("--p", opt.p, "odd prime p >= 3");
        auto* m = sub->add_option("--m", opt.m, "odd extension degree m >= 3");
        sub->add_option("--k", opt.k, "exponent parameter, gcd(m,k)=1 (default 1)");
        sub->add_option("--prim-poly", opt.prim_poly,
                        "primitive polynomial, comma-separated coefficients, constant first");
        sub->add_option("--threads", opt.threads,
                        "worker threads (0 = CYCLOTOME_THREADS env or hardware)");
        if (require_pmk) {
            p->required();
            m->required();
        }
    };

    CLI::App* field = app.add_subcommand("field", "build the field and check polynomials");
    add_field_opts(field, true);

    CLI::App* weights = app.add_subcommand("weights", "compute the weight distribution");
    add_field_opts(weights, true);
    weights->add_option("--method", opt.method, "bruteforce | charsum | closedform | all")
        ->check(CLI::IsMember({"bruteforce", "charsum", "closedform", "all"}));
    weights->add_option("--format", opt.format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    weights->add_option("--output", opt.output, "write to file instead of stdout");

    CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--seed", opt.seed, "seed for sampled property checks");
    verify->add_option("--threads", opt.threads,
                       "worker threads (0 = CYCLOTOME_THREADS env or hardware)");

    try {
        app.parse(argc, argv);
        if (field->parsed()) return cmd_field(opt);
        if (weights->parsed()) return cmd_weights(opt);
        if (verify->parsed()) return cmd_verify(opt);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const cyclotome::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const cyclotome::ParamError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
