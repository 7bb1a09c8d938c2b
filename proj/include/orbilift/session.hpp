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

#ifndef ORBILIFT_SESSION_HPP
#define ORBILIFT_SESSION_HPP

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbilift/connection_lift.hpp"
#include "orbilift/dsl.hpp"
#include "orbilift/invariants.hpp"
#include "orbilift/lift.hpp"

namespace orbilift::session {

using Json = nlohmann::ordered_json;

struct RunOptions {
    std::size_t group_cap = 10000;
    unsigned conductor_max = 24;
};

struct RunResult {
    int exit_code = 0;             // 0 = all verdicts computed, 1 = engine error
    std::vector<Json> records;     // one canonical-key-order object per command

    std::string json_lines() const {
        std::string out;
        for (const auto& r : records) out += r.dump() + "\n";
        return out;
    }

    std::string text() const {
        std::string out;
        for (const auto& r : records) out += render_text(r) + "\n";
        return out;
    }

    static std::string render_text(const Json& r);
};

namespace detail {

inline Json hyperplane_json(const ReflectionHyperplane& h) {
    Json j;
    j["form"] = h.linear_form.to_string();
    j["e"] = h.label;
    return j;
}

inline Json divisor_json(const Divisor& D) {
    Json arr = Json::array();
    for (const auto& t : D.terms()) {
        Json e;
        e["hypersurface"] = t.hypersurface.to_string();
        e["coefficient"] = t.coefficient.to_string();
        arr.push_back(e);
    }
    return arr;
}

inline Json connection_json(const ChristoffelConnection& c) {
    Json arr = Json::array();
    for (const auto& [idx, v] : c.components()) {
        Json e;
        e["index"] = Json::array({c.coords()[idx[0]], c.coords()[idx[1]], c.coords()[idx[2]]});
        e["value"] = v.to_string();
        arr.push_back(e);
    }
    return arr;
}

}  // namespace detail

// Executes the parsed session. Engine failures are reported per command (the
// run continues) and flip the exit code to 1.
class Runner {
  public:
    Runner(const dsl::SessionSpec& spec, const RunOptions& opts) : spec_(spec), opts_(opts) {
        set_max_conductor(opts.conductor_max);
    }

    RunResult run() {
        RunResult result;
        std::size_t index = 0;
        for (const auto& cmd : spec_.commands) {
            Json rec;
            rec["index"] = index;
            rec["command"] = cmd.kind;
            try {
                execute(cmd, rec);
            } catch (const Error& e) {
                rec["error"] = e.what();
                result.exit_code = 1;
            }
            result.records.push_back(std::move(rec));
            ++index;
        }
        return result;
    }

  private:
    const FiniteMatrixGroup& group(const std::string& name) {
        auto it = group_cache_.find(name);
        if (it != group_cache_.end()) return it->second;
        const dsl::GroupDecl* decl = spec_.find_group(name);
        if (!decl) throw Error("unknown group " + name);
        const std::size_t dim = decl->generators.front().rows();
        VarList coords = spec_.coords.empty() ? chart_vars(dim, "z") : spec_.coords;
        if (coords.size() != dim)
            throw Error("group " + name + " does not match the declared coords");
        std::vector<GroupElement> gens;
        for (const auto& m : decl->generators) gens.emplace_back(m);
        FiniteMatrixGroup G = close(gens, opts_.group_cap, coords);
        return group_cache_.emplace(name, std::move(G)).first->second;
    }

    const TensorField& tensor(const std::string& name) {
        const dsl::TensorDecl* decl = spec_.find_tensor(name);
        if (!decl) throw Error("unknown tensor " + name);
        return decl->value;
    }

    void execute(const dsl::Command& cmd, Json& rec) {
        if (cmd.kind == "analyze") run_analyze(cmd.args[0], rec);
        else if (cmd.kind == "invariants") run_invariants(cmd.args[0], rec);
        else if (cmd.kind == "divisor") run_divisor(cmd.args[0], rec);
        else if (cmd.kind == "lift") run_lift(cmd.args[0], cmd.args[1], rec);
        else if (cmd.kind == "lift-connection") run_lift_connection(cmd.args[0], cmd.args[1], rec);
        else if (cmd.kind == "solomon") run_solomon(cmd.args[0], cmd.args[1], rec);
        else if (cmd.kind == "validate") run_validate(rec);
        else if (cmd.kind == "check-diffeo")
            run_check_diffeo(cmd.args[0], cmd.args[1], cmd.args[2], rec);
        else throw Error("unknown command " + cmd.kind);
    }

    void run_analyze(const std::string& gname, Json& rec) {
        const auto& G = group(gname);
        rec["group"] = gname;
        rec["order"] = G.order();
        const auto refl = reflections(G);
        rec["reflections"] = refl.size();
        Json hps = Json::array();
        for (const auto& h : hyperplanes(G)) hps.push_back(detail::hyperplane_json(h));
        rec["hyperplanes"] = hps;
        rec["is_reflection_group"] = is_reflection_group(G);
        rec["is_diagonal"] = is_diagonal(G);
    }

    void run_invariants(const std::string& gname, Json& rec) {
        const auto& G = group(gname);
        rec["group"] = gname;
        const InvariantBasis basis = invariant_generators(G);
        rec["degrees"] = basis.degrees;
        Json gens = Json::array();
        for (const auto& g : basis.generators) gens.push_back(g.to_string());
        rec["generators"] = gens;
        unsigned long long prod = 1;
        for (unsigned d : basis.degrees) prod *= d;
        rec["product_of_degrees"] = prod;
    }

    void run_divisor(const std::string& gname, Json& rec) {
        const auto& G = group(gname);
        rec["group"] = gname;
        rec["reflection_divisor"] = detail::divisor_json(reflection_divisor(G));
        if (is_diagonal(G)) {
            Json strata = Json::array();
            for (const auto& S : orbit_strata(G)) {
                Json s;
                s["stratum"] = S.stratum_coord;
                s["ramification"] = S.ramification;
                strata.push_back(s);
            }
            rec["orbit_strata"] = strata;
        }
    }

    void run_lift(const std::string& tname, const std::string& gname, Json& rec) {
        const auto& G = group(gname);
        const TensorField& T0 = tensor(tname);
        rec["tensor"] = tname;
        rec["group"] = gname;
        const std::size_t n = G.dim();

        if (is_diagonal(G) && is_reflection_group(G)) {
            rec["route"] = "adapted";
            const OrbitMap sigma = monomial_orbit_map(G);
            const auto strata = orbit_strata(G);
            TensorField T = T0.rebased(sigma.map.target_vars);
            std::vector<Polynomial> off;
            for (const auto& yv : sigma.map.target_vars) {
                bool is_stratum = false;
                for (const auto& S : strata)
                    if (S.stratum_coord == yv) is_stratum = true;
                if (!is_stratum) off.push_back(Polynomial::variable(yv));
            }
            Json res = Json::array();
            for (const auto& S : strata) {
                Json s;
                s["stratum"] = S.stratum_coord;
                s["ramification"] = S.ramification;
                s["mu"] = residuum(T, S).mu_S.to_string();
                res.push_back(s);
            }
            rec["residua"] = res;
            LiftCertificate cert = decide_lift_adapted(T, strata, off, G.coords());
            rec["verdict"] = cert.lifts ? "lifts" : "fails";
            if (cert.lifts) {
                if (!is_invariant(G, *cert.lifted))
                    throw Error("lift: certified lift is not invariant (internal error)");
                rec["lifted"] = cert.lifted->to_string();
            } else if (cert.failing_stratum) {
                rec["failing_stratum"] = cert.failing_stratum->stratum_coord;
                rec["mu_S"] = *cert.failing_mu;
            } else if (cert.failing_hypersurface) {
                rec["failing_hypersurface"] = cert.failing_hypersurface->to_string();
            }
            rec["cross_check"] = cross_validate(T, sigma, G, strata) ? "ok" : "MISMATCH";
            return;
        }

        if (is_reflection_group(G)) {
            const OrbitMap sigma = orbit_map(G);
            if (sigma.map.target_dim() != n)
                throw Error("lift: orbit map is not square (internal error)");
            rec["route"] = "pullback";
            Json chart = Json::array();
            for (std::size_t a = 0; a < sigma.map.target_vars.size(); ++a) {
                Json e;
                e["coordinate"] = sigma.map.target_vars[a];
                e["invariant"] = sigma.basis.generators[a].to_string();
                chart.push_back(e);
            }
            rec["orbit_chart"] = chart;
            TensorField T = T0.rebased(sigma.map.target_vars);
            LiftCertificate cert = lift_via_pullback(T, sigma, G);
            rec["verdict"] = cert.lifts ? "lifts" : "fails";
            if (cert.lifts) rec["lifted"] = cert.lifted->to_string();
            return;
        }

        throw Error("lifting decisions need a reflection group; use divisor for reflection data");
    }

    void run_lift_connection(const std::string& cname, const std::string& gname, Json& rec) {
        const auto& G = group(gname);
        const dsl::ConnectionDecl* decl = spec_.find_connection(cname);
        if (!decl) throw Error("unknown connection " + cname);
        rec["connection"] = cname;
        rec["group"] = gname;
        if (!is_diagonal(G))
            throw Error("adapted charts available for diagonal groups only; use lift_via_pullback");
        const auto strata = orbit_strata(G);
        if (strata.size() != 1)
            throw Error("connection lifting works on single-stratum slice charts");
        const unsigned n = static_cast<unsigned>(G.dim());
        const VarList yv = chart_vars(n, "y");
        if (strata[0].stratum_coord != yv.back())
            throw Error("the stratum must sit on the last chart coordinate");
        if (decl->value.coords() != yv)
            throw Error("connection must be declared on the orbit chart " + yv.back());
        const AdaptedConnectionPattern pattern(strata[0].ramification, n);
        auto report = check_liftable_connection(decl->value, pattern);
        rec["ramification"] = pattern.r;
        rec["verdict"] = report.ok ? "lifts" : "fails";
        if (!report.ok) {
            rec["diagnostics"] = report.diagnostics;
            return;
        }
        ChristoffelConnection lifted = lift_connection_slice(decl->value, pattern);
        rec["lifted"] = detail::connection_json(lifted);
    }

    void run_solomon(const std::string& wname, const std::string& gname, Json& rec) {
        const auto& G = group(gname);
        const TensorField& w0 = tensor(wname);
        rec["form"] = wname;
        rec["group"] = gname;
        const OrbitMap sigma = is_diagonal(G) ? monomial_orbit_map(G) : orbit_map(G);
        TensorField w = w0.rebased(G.coords());
        TensorField phi = solomon_express(w, sigma, G);
        rec["phi"] = phi.to_string();
        rec["round_trip"] = "exact";
    }

    void run_validate(Json& rec) {
        const Thm37Sweep sweep = run_thm37_sweep(6, 2, -3, 3);
        rec["verdict_cases"] = sweep.verdict_cases;
        rec["verdict_agreements"] = sweep.verdict_agreements;
        rec["inequality_cases"] = sweep.inequality_cases;
        rec["inequality_agreements"] = sweep.inequality_agreements;
        rec["all_agree"] = sweep.all_agree();
    }

    void run_check_diffeo(const std::string& fname, const std::string& src,
                          const std::string& dst, Json& rec) {
        const dsl::MapDecl* decl = spec_.find_map(fname);
        if (!decl) throw Error("unknown map " + fname);
        const auto& Gs = group(src);
        const auto& Gd = group(dst);
        rec["map"] = fname;
        rec["from"] = src;
        rec["to"] = dst;
        auto strata_src = orbit_strata(Gs);
        auto strata_dst = orbit_strata(Gd);
        const bool ok = check_diffeo_conditions(decl->forward, decl->inverse, strata_src,
                                                strata_dst);
        rec["preserves_divisor"] = ok;
    }

    const dsl::SessionSpec& spec_;
    RunOptions opts_;
    std::map<std::string, FiniteMatrixGroup> group_cache_;
};

inline RunResult run(const dsl::SessionSpec& spec, const RunOptions& opts = {}) {
    return Runner(spec, opts).run();
}

inline std::string RunResult::render_text(const Json& r) {
    std::string out = "[" + std::to_string(r["index"].get<std::size_t>()) + "] " +
                      r["command"].get<std::string>();
    auto field = [&](const char* key) { return r.contains(key); };
    if (field("error")) {
        for (const char* key : {"tensor", "form", "connection", "map"})
            if (field(key)) out += " " + r[key].get<std::string>();
        if (field("group")) out += " over " + r["group"].get<std::string>();
        return out + ": error: " + r["error"].get<std::string>();
    }
    if (field("group")) out += " " + r["group"].get<std::string>();
    if (r["command"] == "analyze") {
        out += ": order=" + std::to_string(r["order"].get<std::size_t>());
        out += " reflections=" + std::to_string(r["reflections"].get<std::size_t>());
        out += " hyperplanes=[";
        bool first = true;
        for (const auto& h : r["hyperplanes"]) {
            if (!first) out += ", ";
            first = false;
            out += "{" + h["form"].get<std::string>() + ", e=" + std::to_string(h["e"].get<unsigned>()) + "}";
        }
        out += "]";
        out += std::string(" reflection_group=") +
               (r["is_reflection_group"].get<bool>() ? "yes" : "no");
        out += std::string(" diagonal=") + (r["is_diagonal"].get<bool>() ? "yes" : "no");
    } else if (r["command"] == "invariants") {
        out += ": degrees=[";
        bool first = true;
        for (const auto& d : r["degrees"]) {
            if (!first) out += ", ";
            first = false;
            out += std::to_string(d.get<unsigned>());
        }
        out += "] generators=[";
        first = true;
        for (const auto& g : r["generators"]) {
            if (!first) out += ", ";
            first = false;
            out += g.get<std::string>();
        }
        out += "] product=" + std::to_string(r["product_of_degrees"].get<unsigned long long>());
    } else if (r["command"] == "divisor") {
        out += ": D = ";
        bool first = true;
        if (r["reflection_divisor"].empty()) out += "0";
        for (const auto& t : r["reflection_divisor"]) {
            if (!first) out += " + ";
            first = false;
            out += t["coefficient"].get<std::string>() + "*{" +
                   t["hypersurface"].get<std::string>() + " = 0}";
        }
        if (r.contains("orbit_strata")) {
            out += " strata=[";
            first = true;
            for (const auto& s : r["orbit_strata"]) {
                if (!first) out += ", ";
                first = false;
                out += "{" + s["stratum"].get<std::string>() +
                       ", r=" + std::to_string(s["ramification"].get<unsigned>()) + "}";
            }
            out += "]";
        }
    } else if (r["command"] == "lift") {
        out = "[" + std::to_string(r["index"].get<std::size_t>()) + "] lift " +
              r["tensor"].get<std::string>() + " over " + r["group"].get<std::string>();
        out += ": route=" + r["route"].get<std::string>();
        out += " verdict=" + r["verdict"].get<std::string>();
        if (r.contains("mu_S")) out += " mu_S=" + std::to_string(r["mu_S"].get<long long>());
        if (r.contains("failing_hypersurface"))
            out += " pole_at={" + r["failing_hypersurface"].get<std::string>() + " = 0}";
        if (r.contains("lifted")) out += " lifted=\"" + r["lifted"].get<std::string>() + "\"";
        if (r.contains("cross_check")) out += " cross_check=" + r["cross_check"].get<std::string>();
    } else if (r["command"] == "lift-connection") {
        out = "[" + std::to_string(r["index"].get<std::size_t>()) + "] lift-connection " +
              r["connection"].get<std::string>() + " over " + r["group"].get<std::string>();
        out += ": verdict=" + r["verdict"].get<std::string>();
        if (r.contains("diagnostics")) {
            out += " [";
            bool first = true;
            for (const auto& d : r["diagnostics"]) {
                if (!first) out += "; ";
                first = false;
                out += d.get<std::string>();
            }
            out += "]";
        }
        if (r.contains("lifted")) {
            out += " lifted={";
            bool first = true;
            for (const auto& e : r["lifted"]) {
                if (!first) out += ", ";
                first = false;
                out += "[" + e["index"][0].get<std::string>() + " " +
                       e["index"][1].get<std::string>() + " " + e["index"][2].get<std::string>() +
                       "] = " + e["value"].get<std::string>();
            }
            out += "}";
        }
    } else if (r["command"] == "solomon") {
        out = "[" + std::to_string(r["index"].get<std::size_t>()) + "] solomon " +
              r["form"].get<std::string>() + " over " + r["group"].get<std::string>();
        out += ": phi=\"" + r["phi"].get<std::string>() + "\" round_trip=" +
               r["round_trip"].get<std::string>();
    } else if (r["command"] == "validate") {
        out += " thm37: verdicts=" + std::to_string(r["verdict_agreements"].get<unsigned long long>()) +
               "/" + std::to_string(r["verdict_cases"].get<unsigned long long>());
        out += " inequality=" +
               std::to_string(r["inequality_agreements"].get<unsigned long long>()) + "/" +
               std::to_string(r["inequality_cases"].get<unsigned long long>());
        out += std::string(" all_agree=") + (r["all_agree"].get<bool>() ? "yes" : "no");
    } else if (r["command"] == "check-diffeo") {
        out = "[" + std::to_string(r["index"].get<std::size_t>()) + "] check-diffeo " +
              r["map"].get<std::string>() + " from " + r["from"].get<std::string>() + " to " +
              r["to"].get<std::string>();
        out += std::string(": preserves_divisor=") +
               (r["preserves_divisor"].get<bool>() ? "yes" : "no");
    }
    return out;
}

}  // namespace orbilift::session

#endif
