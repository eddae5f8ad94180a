#include "aknsmf/cli.hpp"

#include "aknsmf/multiform.hpp"
#include "aknsmf/poisson.hpp"
#include "aknsmf/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>

namespace aknsmf {

namespace {

long now_millis_since(std::chrono::steady_clock::time_point t0) {
    auto dt = std::chrono::steady_clock::now() - t0;
    return std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
}

struct PlannedCheck {
    std::string check;
    std::vector<std::pair<std::string, long>> params;
    int min_order;
    std::function<CheckResult(const AknsFrame&, const FlowSet&)> fn;
};

// --- verify planning ------------------------------------------------------

void plan_darboux(std::vector<PlannedCheck>& plan, int k) {
    plan.push_back({"darboux", {{"k", k}}, std::max(k, 1),
                    [k](const AknsFrame& fr, const FlowSet&) { return darboux_check(fr, k); }});
}

void plan_closure(std::vector<PlannedCheck>& plan, int i, int j, int k) {
    plan.push_back({"closure", {{"i", i}, {"j", j}, {"k", k}}, i + j + k,
                    [i, j, k](const AknsFrame& fr, const FlowSet& fl) {
                        CheckResult r = closure_check(fr, fl, i, j, k);
                        r.merge(ham_closure_check(fr, fl, i, j, k));
                        return r;
                    }});
}

void plan_el_pair(std::vector<PlannedCheck>& plan, int i, int j) {
    // the pair runs its Hamilton-form equations and the delta-d extraction
    // over the triple completed by the smallest available probe time
    int probe = 1;
    while (probe == i || probe == j) ++probe;
    int a = std::min({i, j, probe}), c = std::max({i, j, probe});
    int b = i + j + probe - a - c;
    plan.push_back({"el", {{"i", i}, {"j", j}}, std::max(i + j + 1, i + j + probe),
                    [i, j, a, b, c](const AknsFrame& fr, const FlowSet& fl) {
                        CheckResult r = el_pair_check(fr, fl, i, j);
                        r.merge(el_triple_check(fr, fl, a, b, c));
                        return r;
                    }});
}

void plan_el_triple(std::vector<PlannedCheck>& plan, int i, int j, int k) {
    plan.push_back({"el", {{"i", i}, {"j", j}, {"k", k}}, i + j + k,
                    [i, j, k](const AknsFrame& fr, const FlowSet& fl) {
                        return el_triple_check(fr, fl, i, j, k);
                    }});
}

void plan_legendre(std::vector<PlannedCheck>& plan, int i, int j) {
    plan.push_back({"legendre", {{"i", i}, {"j", j}}, i + j + 1,
                    [i, j](const AknsFrame& fr, const FlowSet&) {
                        return legendre_check(fr, i, j);
                    }});
}

void plan_omega1(std::vector<PlannedCheck>& plan, int i, int j) {
    plan.push_back({"omega1", {{"i", i}, {"j", j}}, i + j + 1,
                    [i, j](const AknsFrame& fr, const FlowSet& fl) {
                        CheckResult r = omega1_check(fr, fl, i, j);
                        r.merge(omega_closure_check(fr, fl, i, j));
                        return r;
                    }});
}

void plan_rmatrix(std::vector<PlannedCheck>& plan, int k) {
    plan.push_back({"rmatrix", {{"k", k}}, std::max(k, 1),
                    [k](const AknsFrame& fr, const FlowSet&) { return rmatrix_check(fr, k); }});
}

void plan_pb_lemma(std::vector<PlannedCheck>& plan, int k) {
    plan.push_back({"pb-lemma", {{"k", k}}, std::max(k, 1),
                    [k](const AknsFrame& fr, const FlowSet&) { return pb_lemma_check(fr, k); }});
}

void plan_zc(std::vector<PlannedCheck>& plan, int i, int j) {
    plan.push_back({"zc-hamiltonian", {{"i", i}, {"j", j}}, i + j + 1,
                    [i, j](const AknsFrame& fr, const FlowSet& fl) {
                        return zc_hamiltonian_check(fr, fl, i, j);
                    }});
}

void plan_conservation(std::vector<PlannedCheck>& plan, int max_index) {
    plan.push_back({"conservation", {{"max-index", max_index}},
                    std::max(2 * max_index, max_index + 1),
                    [max_index](const AknsFrame& fr, const FlowSet& fl) {
                        return conservation_check(fr, fl, max_index);
                    }});
}

void plan_jacobi(std::vector<PlannedCheck>& plan, int max_time) {
    int n = std::max(max_time, 2);
    int order = std::max(n + 1, 4);
    auto with_forms = [n](const AknsFrame& fr, int tag) -> CheckResult {
        HamOneForm a = HamOneForm::conservation_form(fr, n);
        LaxForm w_lam = lax_form(fr, n, 1);
        LaxForm w_mu = lax_form(fr, n, 2);
        LaxForm w_nu = lax_form(fr, n, 3);
        switch (tag) {
            case 0: return jacobi_check(a, a, a);
            case 1:
                return jacobi_check(lax_entry_form(w_lam, 1), lax_entry_form(w_mu, 2),
                                    lax_entry_form(w_nu, 0));
            case 2:
                return jacobi_check(lax_entry_form(w_lam, 1), lax_entry_form(w_mu, 1),
                                    lax_entry_form(w_nu, 2));
            case 3:
                return jacobi_check(lax_entry_form(w_lam, 0), lax_entry_form(w_mu, 0),
                                    lax_entry_form(w_nu, 1));
            case 4:
                return jacobi_check(a, lax_entry_form(w_lam, 1), potential_coeff(fr, 1, 2));
            default: throw Error("unknown jacobi case");
        }
    };
    for (int tag = 0; tag <= 4; ++tag)
        plan.push_back({"jacobi", {{"case", tag}}, order,
                        [tag, with_forms](const AknsFrame& fr, const FlowSet&) {
                            return with_forms(fr, tag);
                        }});
}

void plan_flow_commute(std::vector<PlannedCheck>& plan, int j, int k, int m) {
    plan.push_back({"flow-commute", {{"j", j}, {"k", k}, {"m", m}}, m + j + k,
                    [j, k, m](const AknsFrame&, const FlowSet& fl) {
                        return flow_commute_check(fl, j, k, m);
                    }});
}

int run_verify(const std::string& what, int max_time, std::optional<int> oi, std::optional<int> oj,
               std::optional<int> ok, std::optional<int> otime, std::optional<int> order_override,
               const std::string& format, std::ostream& out, std::ostream& err) {
    std::vector<PlannedCheck> plan;
    const int n = max_time;
    bool has_pair = oi && oj;
    bool has_triple = has_pair && ok;
    std::optional<int> single_k = otime ? otime : (oi || oj ? std::nullopt : ok);

    auto add = [&](const std::string& name) {
        if (name == "darboux") {
            if (single_k) plan_darboux(plan, *single_k);
            else
                for (int k = 0; k <= 2 * n; ++k) plan_darboux(plan, k);
        } else if (name == "closure") {
            if (has_triple) plan_closure(plan, *oi, *oj, *ok);
            else
                for (int i = 1; i <= n + 1; ++i)
                    for (int j = i + 1; j <= n + 1; ++j)
                        for (int k = j + 1; k <= n + 1; ++k) plan_closure(plan, i, j, k);
        } else if (name == "el") {
            if (has_triple) plan_el_triple(plan, *oi, *oj, *ok);
            else if (has_pair) plan_el_pair(plan, *oi, *oj);
            else {
                for (int i = 1; i <= n; ++i)
                    for (int j = i + 1; j <= n; ++j) plan_el_pair(plan, i, j);
                for (int i = 1; i <= n; ++i)
                    for (int j = i + 1; j <= n; ++j)
                        for (int k = j + 1; k <= n; ++k) plan_el_triple(plan, i, j, k);
            }
        } else if (name == "legendre") {
            if (has_pair) plan_legendre(plan, *oi, *oj);
            else
                for (int i = 1; i <= n; ++i)
                    for (int j = i + 1; j <= n; ++j) plan_legendre(plan, i, j);
        } else if (name == "omega1") {
            if (has_pair) plan_omega1(plan, *oi, *oj);
            else
                for (int i = 1; i <= n; ++i)
                    for (int j = i + 1; j <= n; ++j) plan_omega1(plan, i, j);
        } else if (name == "rmatrix") {
            if (single_k) plan_rmatrix(plan, *single_k);
            else
                for (int k = 0; k <= n + 2; ++k) plan_rmatrix(plan, k);
        } else if (name == "pb-lemma") {
            if (single_k) plan_pb_lemma(plan, *single_k);
            else
                for (int k = 0; k <= n + 2; ++k) plan_pb_lemma(plan, k);
        } else if (name == "zc-hamiltonian") {
            if (has_pair) plan_zc(plan, *oi, *oj);
            else
                for (int i = 0; i <= n + 1; ++i)
                    for (int j = i + 1; j <= n + 1; ++j) plan_zc(plan, i, j);
        } else if (name == "conservation") {
            plan_conservation(plan, n + 2);
        } else if (name == "jacobi") {
            plan_jacobi(plan, n);
        } else if (name == "flow-commute") {
            for (int j = 0; j <= n; ++j)
                for (int k = j + 1; k <= n; ++k)
                    for (int m = 1; m <= n + 2; ++m) plan_flow_commute(plan, j, k, m);
        } else {
            throw Error("unknown check " + name);
        }
    };

    if (what == "all") {
        for (const char* name : {"darboux", "closure", "el", "legendre", "omega1", "rmatrix",
                                 "pb-lemma", "zc-hamiltonian", "conservation", "jacobi",
                                 "flow-commute"})
            add(name);
    } else {
        add(what);
    }

    int needed = 1;
    for (const PlannedCheck& p : plan) needed = std::max(needed, p.min_order);
    int order = needed;
    if (order_override) {
        if (*order_override < needed) {
            err << "error: --order " << *order_override << " is below the computed minimum "
                << needed << " for this check set\n";
            return 2;
        }
        order = *order_override;
    }

    auto frame = std::make_shared<const AknsFrame>(build_frame(order));
    FlowSet flows(frame);

    std::vector<std::function<CheckRecord()>> jobs;
    jobs.reserve(plan.size());
    for (const PlannedCheck& p : plan) {
        jobs.push_back([&frame, &flows, p]() {
            auto t0 = std::chrono::steady_clock::now();
            CheckResult res;
            try {
                res = p.fn(*frame, flows);
            } catch (const std::exception& e) {
                res = CheckResult::failed(std::string("error: ") + e.what());
            }
            return CheckRecord::from(p.check, p.params, res, now_millis_since(t0));
        });
    }
    std::vector<CheckRecord> records = run_jobs(jobs);
    out << (format == "json" ? serialize_records_json(records) : serialize_records_text(records));
    for (const CheckRecord& r : records)
        if (r.status == CheckRecord::Status::Fail) return 1;
    return 0;
}

// --- derive ---------------------------------------------------------------

Variable parse_phase_var(const std::string& name) {
    if (name.size() < 2 || (name[0] != 'e' && name[0] != 'f'))
        throw Error("--var expects e<j> or f<j>, got '" + name + "'");
    int idx = std::atoi(name.c_str() + 1);
    if (idx < 1) throw Error("--var expects a positive index, got '" + name + "'");
    return name[0] == 'e' ? Variable::e(idx) : Variable::f(idx);
}

std::string render_series_qr(const TruncSeries& s, const QrChart& chart) {
    if (s.is_zero()) return "0";
    std::string outstr;
    bool first = true;
    for (int k = s.low(); k <= s.high(); ++k) {
        Poly c = chart.ef_to_qr(s.coeff(k));
        if (c.is_zero()) continue;
        if (!first) outstr += " + ";
        first = false;
        outstr += "(" + c.str() + ") * z^" + std::to_string(k);
    }
    return outstr.empty() ? "0" : outstr;
}

int run_derive(const std::string& what, std::optional<int> oi, std::optional<int> oj,
               std::optional<int> ok, std::optional<int> otime, const std::string& var,
               const std::string& coords, std::optional<int> order_override, std::ostream& out,
               std::ostream& err) {
    bool qr = coords == "qr";
    auto need = [&](const std::optional<int>& v, const char* flag) -> int {
        if (!v) throw Error(std::string("derive ") + what + " requires " + flag);
        return *v;
    };

    int min_order = 1;
    if (what == "L" || what == "H") {
        min_order = need(oi, "--i") + need(oj, "--j") + 1;
    } else if (what == "omega") {
        min_order = std::max(1, need(ok, "--k"));
    } else if (what == "flow") {
        if (var.empty()) throw Error("derive flow requires --var");
        min_order = parse_phase_var(var).index + need(otime, "--time");
    } else if (what == "lax") {
        min_order = std::max(1, need(otime, "--time"));
    } else {
        throw Error("unknown derive target " + what);
    }
    int order = min_order;
    if (order_override) {
        if (*order_override < min_order) {
            err << "error: --order " << *order_override << " is below the computed minimum "
                << min_order << "\n";
            return 2;
        }
        order = *order_override;
    }
    AknsFrame frame = build_frame(order);

    if (what == "L" || what == "H") {
        Poly value = what == "L" ? lagrangian_coeff(frame, *oi, *oj).value
                                 : hamiltonian_coeff(frame, *oi, *oj).value;
        if (qr) {
            QrChart chart(std::max(1, value.max_ef_index()));
            value = chart.ef_to_qr(value);
        }
        out << value.str() << "\n";
        return 0;
    }
    if (what == "omega") {
        VBForm omega = symplectic_coeff(frame, *ok).omega;
        if (qr) {
            int top = 1;
            for (const VBTerm& t : omega.terms())
                for (const Variable& v : t.vlegs) top = std::max(top, v.index);
            omega = ef_to_qr(QrChart(top), omega);
        }
        out << omega.str() << "\n";
        return 0;
    }
    if (what == "flow") {
        Variable v = parse_phase_var(var);
        auto frame_ptr = std::make_shared<const AknsFrame>(std::move(frame));
        FlowSet flows(frame_ptr);
        Poly value = flows.apply(*otime, Poly::var(v));
        if (qr) value = QrChart(std::max(1, value.max_ef_index())).ef_to_qr(value);
        out << value.str() << "\n";
        return 0;
    }
    // lax
    MatrixSeries w = lax_matrix(frame, *otime);
    std::unique_ptr<QrChart> chart;
    if (qr) {
        int top = 1;
        for (int rc = 0; rc < 4; ++rc) {
            const TruncSeries& s = w.at(rc / 2, rc % 2);
            for (int z = s.low(); z <= s.high(); ++z)
                top = std::max(top, s.coeff(z).max_ef_index());
        }
        chart = std::make_unique<QrChart>(top);
    }
    for (int row = 0; row < 2; ++row)
        for (int col = 0; col < 2; ++col) {
            const TruncSeries& s = w.at(row, col);
            out << "Q[" << row + 1 << "][" << col + 1 << "] = "
                << (qr ? render_series_qr(s, *chart) : s.str()) << "\n";
        }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact multiform engine for an integrable 2x2 hierarchy"};
    app.require_subcommand(1);

    std::string target, check_name;
    std::optional<int> oi, oj, ok, otime, order_override;
    std::string var, coords = "ef", format = "text";
    int max_time = 4;

    CLI::App* derive = app.add_subcommand("derive", "print a derived object");
    derive->add_option("what", target, "L|H|omega|flow|lax")->required();
    derive->add_option("--i", oi);
    derive->add_option("--j", oj);
    derive->add_option("--k", ok);
    derive->add_option("--time", otime);
    derive->add_option("--var", var);
    derive->add_option("--coords", coords)->check(CLI::IsMember({"ef", "qr"}));
    derive->add_option("--order", order_override);

    CLI::App* verify = app.add_subcommand("verify", "run verification checks");
    verify->add_option("what", check_name,
                       "darboux|closure|el|legendre|omega1|rmatrix|pb-lemma|zc-hamiltonian|"
                       "conservation|jacobi|flow-commute|all")
        ->required();
    verify->add_option("--max-time", max_time)->check(CLI::PositiveNumber);
    verify->add_option("--i", oi);
    verify->add_option("--j", oj);
    verify->add_option("--k", ok);
    verify->add_option("--time", otime);
    verify->add_option("--order", order_override);
    verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    std::vector<std::string> argv(args);
    try {
        std::vector<const char*> cargv;
        cargv.push_back("aknsmf");
        for (const std::string& a : argv) cargv.push_back(a.c_str());
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help
            out << app.help() << "\n";
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (derive->parsed())
            return run_derive(target, oi, oj, ok, otime, var, coords, order_override, out, err);
        static const std::vector<std::string> known{
            "darboux", "closure", "el", "legendre", "omega1", "rmatrix", "pb-lemma",
            "zc-hamiltonian", "conservation", "jacobi", "flow-commute", "all"};
        if (std::find(known.begin(), known.end(), check_name) == known.end()) {
            err << "usage error: unknown check '" << check_name << "'\n";
            return 2;
        }
        return run_verify(check_name, max_time, oi, oj, ok, otime, order_override, format, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace aknsmf
