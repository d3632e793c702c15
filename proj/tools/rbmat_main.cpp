// rbmat: exact verification batteries for the weight-zero Rota-Baxter
// operator catalog on small matrix algebras.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "rbmat/runner.hpp"

using namespace rbmat;

namespace {

std::map<std::string, Rational> parse_params(const std::string& text) {
    std::map<std::string, Rational> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto comma = text.find(',', pos);
        std::string tok =
            text.substr(pos, comma == std::string::npos ? text.npos : comma - pos);
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw usage_error("--params expects k=v[,k=v...]");
        out.emplace(tok.substr(0, eq), parse_rational(tok.substr(eq + 1)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

void emit(const RunReport& report, bool as_json, const std::string& out_path) {
    std::string text = as_json ? report.to_json().dump(2) + "\n" : report.to_table();
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw error("cannot open output file: " + out_path);
        f << text;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Rota-Baxter operator toolkit for M_2 and M_3"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string domain_str = "Q";
    std::string out_path;
    bool as_json = false;
    app.add_option("--domain", domain_str, "scalar domain: Q | Qi | Qsqrt:d | Fp:p")
        ->capture_default_str();
    app.add_flag("--json", as_json, "emit machine-readable JSON instead of a table");
    app.add_option("--out", out_path, "write the report to a file");

    auto* verify = app.add_subcommand("verify", "run the per-entry verification battery");
    std::string selector = "*";
    std::string verify_params;
    verify->add_option("selector", selector, "catalog id or trailing-star glob (Q*, R3, ...)");
    verify->add_option("--params", verify_params,
                       "verify one instance at these parameters, e.g. n=6 or kappa=-1,beta=2");

    auto* fingerprint_cmd =
        app.add_subcommand("fingerprint", "fingerprint table and distinctness matrix");
    std::string fp_selector = "Q*";
    fingerprint_cmd->add_option("selector", fp_selector, "catalog id or glob");

    app.add_subcommand("claims", "run the conjugacy-claim battery");

    auto* derive = app.add_subcommand("derive", "dump the residual system of a stage template");
    std::string template_id;
    std::string check_path;
    derive->add_option("template", template_id, "section3 | section4-21par | section4-stage1")
        ->required();
    derive->add_option("--check", check_path, "assignments JSON to test against the system");

    auto* conjugate_cmd =
        app.add_subcommand("conjugate", "apply a named automorphism to an operator");
    std::string in_path, by_spec, op_id, params_str;
    conjugate_cmd->add_option("--in", in_path, "operator JSON file");
    conjugate_cmd->add_option("--id", op_id, "catalog id instead of --in");
    conjugate_cmd->add_option("--params", params_str, "catalog parameters k=v,...");
    conjugate_cmd->add_option("--by", by_spec,
                              "psi(r,s) | phi(a,b,l,d) | theta12[*T] | transpose | inner:[[...]]")
        ->required();

    auto* manifest = app.add_subcommand("manifest", "dump the catalog manifest (catalog.json)");
    (void)manifest;

    CLI11_PARSE(app, argc, argv);

    try {
        ScalarDomain dom = ScalarDomain::parse(domain_str);
        RunReport report;
        if (app.got_subcommand("verify")) {
            std::optional<std::map<std::string, Rational>> vp;
            if (!verify_params.empty()) vp = parse_params(verify_params);
            report = cmd_verify(selector, dom, true, vp);
        } else if (app.got_subcommand("fingerprint")) {
            if (dom.kind() != DomainKind::Rationals)
                throw usage_error("fingerprints are computed over Q");
            report = cmd_fingerprint(fp_selector);
        } else if (app.got_subcommand("claims")) {
            report = cmd_claims();
        } else if (app.got_subcommand("derive")) {
            std::optional<Json> check;
            if (!check_path.empty()) {
                std::ifstream f(check_path);
                if (!f) throw usage_error("cannot read " + check_path);
                check = Json::parse(f);
            }
            report = cmd_derive(template_id, check, dom);
        } else if (app.got_subcommand("conjugate")) {
            LinearOperator<Scalar> op(3, Scalar(dom));
            if (!in_path.empty()) {
                std::ifstream f(in_path);
                if (!f) throw usage_error("cannot read " + in_path);
                op = operator_from_json(Json::parse(f));
            } else if (!op_id.empty()) {
                op = build_operator(op_id, params_str.empty()
                                               ? std::map<std::string, Rational>{}
                                               : parse_params(params_str),
                                    dom);
            } else {
                throw usage_error("conjugate needs --in or --id");
            }
            report = cmd_conjugate(op, by_spec);
        } else if (app.got_subcommand("manifest")) {
            report = cmd_manifest();
        }
        emit(report, as_json, out_path);
        return report.exit_status();
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Json::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
