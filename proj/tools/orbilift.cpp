/*
   Copyright 2026 The orbilift authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <orbilift/session.hpp>

namespace {

int run_file(const std::string& path, bool json, std::size_t cap, unsigned conductor_max) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "orbilift: cannot open " << path << "\n";
        return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();

    orbilift::dsl::SessionSpec spec;
    try {
        spec = orbilift::dsl::parse(buf.str());
    } catch (const orbilift::Error& e) {
        std::cerr << path << ":" << e.what() << "\n";
        return 2;
    }

    orbilift::session::RunOptions opts;
    opts.group_cap = cap;
    opts.conductor_max = conductor_max;
    orbilift::session::RunResult result = orbilift::session::run(spec, opts);
    std::cout << (json ? result.json_lines() : result.text());
    return result.exit_code;
}

bool parse_range(const std::string& text, long long& lo, long long& hi) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) return false;
    try {
        lo = std::stoll(text.substr(0, dots));
        hi = std::stoll(text.substr(dots + 2));
    } catch (...) {
        return false;
    }
    return lo <= hi;
}

int run_validate(const std::string& what, unsigned rmax, unsigned pqmax,
                 const std::string& mrange, bool json) {
    if (what != "thm37") {
        std::cerr << "orbilift: unknown validation target '" << what << "' (expected thm37)\n";
        return 2;
    }
    long long mlo = -3, mhi = 3;
    if (!parse_range(mrange, mlo, mhi)) {
        std::cerr << "orbilift: bad --mrange '" << mrange << "' (expected a..b)\n";
        return 2;
    }
    try {
        const orbilift::Thm37Sweep sweep = orbilift::run_thm37_sweep(rmax, pqmax, mlo, mhi);
        if (json) {
            orbilift::session::Json j;
            j["command"] = "validate";
            j["target"] = "thm37";
            j["verdict_cases"] = sweep.verdict_cases;
            j["verdict_agreements"] = sweep.verdict_agreements;
            j["inequality_cases"] = sweep.inequality_cases;
            j["inequality_agreements"] = sweep.inequality_agreements;
            j["all_agree"] = sweep.all_agree();
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "thm37: verdicts " << sweep.verdict_agreements << "/"
                      << sweep.verdict_cases << ", inequality " << sweep.inequality_agreements
                      << "/" << sweep.inequality_cases << ", all_agree="
                      << (sweep.all_agree() ? "yes" : "no") << "\n";
        }
        return sweep.all_agree() ? 0 : 1;
    } catch (const orbilift::Error& e) {
        std::cerr << "orbilift: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orbilift - tensor fields and connections on finite-group orbit spaces"};
    app.require_subcommand(1);

    std::string file;
    bool json = false;
    std::size_t cap = 10000;
    unsigned conductor_max = 24;
    CLI::App* run = app.add_subcommand("run", "execute a session file");
    run->add_option("file", file, "session file")->required();
    run->add_flag("--json", json, "emit one JSON object per command");
    run->add_option("--cap", cap, "group enumeration cap (default 10000)");
    run->add_option("--conductor-max", conductor_max, "largest cyclotomic conductor (default 24)");

    std::string target;
    unsigned rmax = 6, pqmax = 2;
    std::string mrange = "-3..3";
    bool vjson = false;
    CLI::App* validate = app.add_subcommand("validate", "run the built-in equivalence sweeps");
    validate->add_option("target", target, "validation target (thm37)")->required();
    validate->add_option("--rmax", rmax, "largest cyclic order (default 6)");
    validate->add_option("--pqmax", pqmax, "largest tensor rank per kind (default 2)");
    validate->add_option("--mrange", mrange, "order range a..b (default -3..3)");
    validate->add_flag("--json", vjson, "emit a JSON summary");

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) return run_file(file, json, cap, conductor_max);
    if (validate->parsed()) return run_validate(target, rmax, pqmax, mrange, vjson);
    return 2;
}
