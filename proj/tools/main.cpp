#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "gcover/parse.hpp"

using namespace gcover;
using namespace gcover::cli;

int main(int argc, char** argv)
{
    CLI::App app{"Canonical Groebner covers of parametric polynomial ideals"};
    std::string command, path, json_out;
    std::string order;
    Options opt;
    app.add_option("command", command, "cover|hcover|jideal|zgen|pseudodiv|specialize|verify")
        ->required()
        ->check(CLI::IsMember({"cover", "hcover", "jideal", "zgen", "pseudodiv", "specialize", "verify"}));
    app.add_option("file", path, "problem file (verify also accepts cover JSON)")->required();
    app.add_option("--order", order, "term order on the variables")->check(CLI::IsMember({"lex", "grlex", "grevlex"}));
    app.add_option("--seed", opt.seed, "sampling seed for verify")->default_val(0);
    app.add_option("--json", json_out, "write the JSON report here");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }
    if (!order.empty()) opt.order = order;

    try {
        Output out = run_command(command, path, opt);
        std::cout << out.text;
        if (!json_out.empty()) {
            std::ofstream f(json_out);
            if (!f) {
                std::cerr << "error: cannot write '" << json_out << "'\n";
                return kInputError;
            }
            f << out.json.dump(2) << "\n";
        }
        return out.code;
    } catch (const gcover::ParseError& e) {
        std::cerr << path << ":" << e.what() << "\n";
        return kInputError;
    } catch (const ConsistencyError& e) {
        std::cerr << "internal consistency error: " << e.what() << "\n";
        return kConsistencyError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kConsistencyError;
    }
}
