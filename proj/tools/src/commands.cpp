#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "json.hpp"

#include "algebra_io.hpp"
#include "manin/double_geometry.hpp"
#include "manin/kks.hpp"
#include "manin/moment.hpp"

namespace manin::cli {

using nlohmann::ordered_json;

namespace {

std::string fmt_sci(double v) { return format_residual(v); }

ordered_json report_to_json(const Report& rep, const std::string& command,
                            const AlgebraFile& file, const CommonOptions& opt,
                            const ordered_json& extra = ordered_json::object()) {
    ordered_json doc;
    doc["tool"] = kToolVersion;
    doc["command"] = command;
    doc["input"] = ordered_json{{"path", file.path}, {"digest", "fnv1a64:" + file.digest}};
    doc["options"] =
        ordered_json{{"samples", opt.samples}, {"seed", opt.seed}, {"tol", fmt_sci(opt.tol)}};
    if (!extra.empty())
        for (const auto& [k, v] : extra.items()) doc[k] = v;
    ordered_json checks = ordered_json::array();
    int failed = 0;
    for (const auto& c : rep.checks()) {
        ordered_json row;
        row["id"] = c.id;
        row["identity"] = c.identity;
        row["status"] = c.pass ? "pass" : "fail";
        row["residual"] = c.residual;
        if (!c.witness.empty()) row["witness"] = c.witness;
        checks.push_back(row);
        if (!c.pass) ++failed;
    }
    doc["checks"] = checks;
    doc["summary"] = ordered_json{{"total", rep.checks().size()}, {"failed", failed}};
    return doc;
}

void render(const Report& rep, const ordered_json& doc, const CommonOptions& opt,
            std::ostream& out) {
    if (opt.json_output) {
        out << doc.dump(2) << "\n";
        return;
    }
    for (const auto& c : rep.checks()) {
        out << (c.pass ? "PASS  " : "FAIL  ") << c.id << "  " << c.identity;
        if (c.residual != "0") out << "  [residual " << c.residual << "]";
        if (!c.witness.empty()) out << "  (" << c.witness << ")";
        out << "\n";
    }
    int failed = 0;
    for (const auto& c : rep.checks())
        if (!c.pass) ++failed;
    out << (failed == 0 ? "OK" : "FAILED") << ": " << rep.checks().size() - failed << "/"
        << rep.checks().size() << " checks passed\n";
}

void prefix_into(Report& dst, const Report& src, const std::string& prefix) {
    for (const auto& c : src.checks()) dst.add(prefix + c.id, c.identity, c.pass, c.residual,
                                               c.witness);
}

Twist seeded_rational_twist(const BasedSpace& space, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    Tensor2 t(space);
    for (int i = 0; i < space.dim(); ++i)
        for (int j = i + 1; j < space.dim(); ++j) {
            Rat v(num(rng), den(rng));
            t.at(i, j) = v;
            t.at(j, i) = -v;
        }
    return Twist::from_tensor(t);
}

// ---------------------------------------------------------------- validate

Report run_validate(const AlgebraFile& file, const CommonOptions& opt) {
    Report rep = validate_algebra(file.model.algebra);
    bool base_ok = rep.all_pass();
    if (base_ok && file.model.algebra.K) {
        try {
            QuasiTriple qt = QuasiTriple::build_pair_from_metric(file.model.algebra);
            rep.add("double.assembles", "metric double satisfies Jacobi", true);
            RatMat diag(2 * qt.n(), qt.n());
            for (int i = 0; i < qt.n(); ++i) diag.at(i, i) = Rat(1);
            prefix_into(rep, verify_manin_pair(qt.d(), diag), "");
        } catch (const std::exception& e) {
            rep.add("double.assembles", "metric double satisfies Jacobi", false, "0", e.what());
        }
    }
    if (base_ok && file.model.has_rep()) {
        MatrixGroupModel model(file.model);
        prefix_into(rep, model.validate(opt.seed, std::min(opt.samples, 20)), "");
    }
    rep.finalize();
    return rep;
}

// ------------------------------------------------------------------ suites

Report suite_algebra(const AlgebraFile& file, const CommonOptions& opt) {
    Report rep = validate_algebra(file.model.algebra);
    const LieAlgebraSpec& g = file.model.algebra;
    if (!rep.all_pass()) {
        rep.finalize();
        return rep;
    }

    // standard triple and its exact identity suite
    QuasiBialgebraData std_qb{LieAlgebraSpec{g.name, g.f, std::nullopt}, Cobracket(g.space()),
                              Multivector(g.space(), 3)};
    prefix_into(rep, check_identities(QuasiTriple::build_double(std_qb)), "std.");

    // linear bivector geometry on the dual, exact
    prefix_into(rep, KksGeometry(g).verify(opt.samples, opt.seed), "");

    if (g.K) {
        QuasiTriple qt = QuasiTriple::build_pair_from_metric(g);
        prefix_into(rep, check_identities(qt), "metric.");

        RatMat diag(2 * qt.n(), qt.n());
        for (int i = 0; i < qt.n(); ++i) diag.at(i, i) = Rat(1);
        prefix_into(rep, verify_manin_pair(qt.d(), diag), "");

        std::mt19937 rng(opt.seed);
        bool two_path = true, recheck = true;
        for (int k = 0; k < 5; ++k) {
            Twist t = seeded_rational_twist(g.space(), rng);
            QuasiBialgebraData via_formula = apply_twist(qt.quasibialgebra(), t);
            QuasiBialgebraData via_graph = derive_quasibialgebra(qt.with_twist(t));
            if (!(via_formula.F == via_graph.F && via_formula.phi == via_graph.phi))
                two_path = false;
            if (!check_identities(qt.with_twist(t)).all_pass()) recheck = false;
        }
        rep.add("twist.two_path", "apply_twist agrees with re-derivation from the twisted graph",
                two_path);
        rep.add("twist.identities", "canonical r-matrix identities hold after twisting", recheck);

        Twist t1 = seeded_rational_twist(g.space(), rng);
        Twist t2 = seeded_rational_twist(g.space(), rng);
        rep.add("twist.composition", "twisting by t then u equals twisting by t+u",
                qt.with_twist(t1).with_twist(t2).j_matrix() == qt.with_twist(t1 + t2).j_matrix());

        Tensor2 shifted = qt.with_twist(t1).canonical_r() - qt.canonical_r();
        Tensor2 expect(qt.d().space());
        Tensor2 tt = t1.tensor();
        for (int i = 0; i < qt.n(); ++i)
            for (int j = 0; j < qt.n(); ++j) expect.at(i, j) = tt.at(i, j);
        rep.add("twist.r_shift", "r'_d = r_d + t", shifted == expect);
    }
    rep.finalize();
    return rep;
}

Report suite_group(const AlgebraFile& file, const CommonOptions& opt) {
    Report rep;
    MatrixGroupModel model(file.model);
    prefix_into(rep, model.validate(opt.seed, std::min(opt.samples, 20)), "");
    DoubleGeometry geo(std::move(model));
    const int n = geo.n();
    std::mt19937 rng(opt.seed);
    Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(n, n);

    Twist rational_t = seeded_rational_twist(geo.model().algebra().space(), rng);
    Eigen::MatrixXd t = twist_to_eigen(rational_t.tensor()) * 0.25;

    double pg_ref = 0, pg_cocycle = 0, ps_twist = 0, smom = 0, tau_res = 0, hat2 = 0;
    for (int k = 0; k < opt.samples; ++k) {
        GroupPoint s = geo.model().random_point(rng, 1.5);
        pg_ref = std::max(pg_ref, geo.P_G(s, zero).norm());
        GroupPoint h = geo.model().random_point(rng, 1.5);
        GroupPoint sh = geo.model().point(s.matrix * h.matrix);
        pg_cocycle = std::max(pg_cocycle, (geo.P_G(sh, t) - geo.P_G(s, t) -
                                           s.Ad * geo.P_G(h, t) * s.Ad.transpose())
                                              .norm());
        Eigen::MatrixXd B = s.Ad.inverse();
        Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
        Eigen::MatrixXd tS = (I - B) * t * (I - B).transpose();
        ps_twist = std::max(ps_twist, (geo.P_S(s, t) - geo.P_S(s, zero) + tS).norm());

        if (geo.admissibility(s, zero).margin > 1e-3) {
            Eigen::MatrixXd P = geo.P_S(s, zero);
            Eigen::MatrixXd tau = geo.tau(s, zero);
            tau_res = std::max(tau_res, (tau + tau.transpose()).norm());
            for (int i = 0; i < n; ++i) {
                Eigen::VectorXd x = Eigen::VectorXd::Unit(n, i);
                smom = std::max(smom,
                                (DoubleGeometry::sharp(P, geo.hat(x, s, zero)) - (x - B * x))
                                    .norm());
                if (geo.admissibility(s, t).margin > 1e-3)
                    hat2 = std::max(hat2, (geo.twisted_hat(x, s, zero, t) - geo.hat(x, s, t))
                                              .norm());
            }
        }
    }
    rep.add("group.pg_reference", "P_G vanishes for the Ad-invariant reference complement",
            pg_ref < opt.tol, fmt_sci(pg_ref));
    rep.add("group.pg_cocycle", "t_gh = t_g + Ad_g t_h", pg_cocycle < opt.tol,
            fmt_sci(pg_cocycle));
    rep.add("group.ps_twist_law", "P_S' = P_S - t_S", ps_twist < opt.tol, fmt_sci(ps_twist));
    rep.add("group.smom", "sharp(P_S) x-hat = x_S", smom < opt.tol, fmt_sci(smom));
    rep.add("group.tau_antisym", "tau_s antisymmetric", tau_res < opt.tol, fmt_sci(tau_res));
    rep.add("group.hat_two_path", "transported hat forms match the twisted complement",
            hat2 < opt.tol, fmt_sci(hat2));

    // pointwise Schouten identity of P_S through the exact frame algebra
    {
        Multivector a_mv = geo.triple().canonical_r().antisymmetric_part().to_multivector();
        Multivector P_field = -geo.dressing_frame_field(a_mv);
        Multivector half_PP = Rat(1, 2) * schouten(P_field, P_field, geo.frame().f());
        Multivector phi_field = geo.action_frame_field(geo.triple().phi());
        double worst = 0, worst_phi = 0;
        for (int k = 0; k < opt.samples; ++k) {
            GroupPoint s = geo.model().random_point(rng, 1.5);
            auto lhs = geo.frame_eval3(half_PP, s);
            auto rhs = geo.frame_eval3(phi_field, s);
            for (size_t i = 0; i < lhs.size(); ++i) {
                worst = std::max(worst, std::abs(lhs[i] - rhs[i]));
                worst_phi = std::max(worst_phi, std::abs(rhs[i]));
            }
        }
        rep.add("group.schouten_ps", "1/2 [P_S, P_S] = phi_S pointwise", worst < opt.tol,
                fmt_sci(worst));
        if (geo.model().name() == "su2")
            rep.add("group.phi_s_vanishes", "phi_S = 0 on SU(2) although phi != 0",
                    worst_phi < opt.tol, fmt_sci(worst_phi));
    }
    rep.finalize();
    return rep;
}

Report suite_moment(const AlgebraFile& file, const CommonOptions& opt) {
    Report rep;
    DoubleGeometry geo{MatrixGroupModel(file.model)};
    const int n = geo.n();
    std::mt19937 rng(opt.seed);

    SampleOptions sopt;
    sopt.samples = opt.samples;
    sopt.seed = opt.seed;
    sopt.tol = opt.tol;

    Twist rational_t = seeded_rational_twist(geo.model().algebra().space(), rng);
    Eigen::MatrixXd t = twist_to_eigen(rational_t.tensor()) * 0.25;
    prefix_into(rep, moment_check_S(geo, t, sopt), "");

    // generic conjugacy class from a seeded point
    GroupPoint g0 = geo.model().random_point(rng, 1.0);
    prefix_into(rep, moment_check_conjugacy(geo, g0, sopt), "generic.");
    // class meeting the -1 locus when the model has one (su2 torus at pi)
    if (geo.model().name() == "su2") {
        Eigen::VectorXd c = Eigen::VectorXd::Zero(n);
        c(0) = M_PI;
        prefix_into(rep, moment_check_conjugacy(geo, geo.model().exp_point(c), sopt, 0.5),
                    "locus.");
    }

    // distribution along admissible samples
    {
        bool all = true;
        double worst_margin = 1;
        int done = 0;
        for (int k = 0; k < 4 * opt.samples && done < opt.samples; ++k) {
            GroupPoint s = geo.model().random_point(rng, 1.5);
            if (!geo.admissibility(s, Eigen::MatrixXd::Zero(n, n)).admissible ||
                !geo.admissibility(s, t).admissible)
                continue;
            Report sub = distribution_check(geo, s, t, opt.tol);
            if (!sub.all_pass()) all = false;
            ++done;
        }
        rep.add("distribution.sweep",
                "im sharp(P) twist-invariant and contains orbit tangents", all && done > 0,
                all ? "0" : "failure", "samples " + std::to_string(done));
        (void)worst_margin;
    }

    // Poisson bracket of invariants
    {
        ScalarFn f1 = [](const Eigen::MatrixXd& g) { return g.trace(); };
        ScalarFn f2 = [](const Eigen::MatrixXd& g) { return (g * g).trace(); };
        double worst = 0, shift = 0;
        Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(n, n);
        for (int k = 0; k < std::min(opt.samples, 20); ++k) {
            GroupPoint s = geo.model().random_point(rng, 1.5);
            double b0 = invariant_bracket(geo, f1, f2, s, zero);
            double bt = invariant_bracket(geo, f1, f2, s, t);
            worst = std::max({worst, std::abs(b0), std::abs(bt)});
            shift = std::max(shift, std::abs(bt - b0));
        }
        rep.add("bracket.class_functions", "P_S(d tr, d tr^2) = 0 for class functions",
                worst < 1e-6, fmt_sci(worst));
        rep.add("bracket.twist_independent", "bracket of invariants unchanged by twists",
                shift < 1e-6, fmt_sci(shift));
    }
    rep.finalize();
    return rep;
}

// ---------------------------------------------------------------- elements

Eigen::VectorXd parse_algebra_element(const std::string& expr, const BasedSpace& space) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(space.dim());
    std::string cleaned;
    for (char c : expr)
        if (!isspace(static_cast<unsigned char>(c))) cleaned += c;
    if (cleaned.empty() || cleaned == "0") return v;
    size_t pos = 0;
    while (pos < cleaned.size()) {
        size_t next = pos + 1;
        while (next < cleaned.size() && cleaned[next] != '+' && cleaned[next] != '-') ++next;
        std::string term = cleaned.substr(pos, next - pos);
        double coeff = 1.0;
        std::string label = term;
        auto star = term.find('*');
        if (star != std::string::npos) {
            coeff = std::stod(term.substr(0, star));
            label = term.substr(star + 1);
        } else if (!term.empty() && (term[0] == '+' || term[0] == '-')) {
            coeff = (term[0] == '-') ? -1.0 : 1.0;
            label = term.substr(1);
        }
        if (!label.empty() && label[0] == '+') label = label.substr(1);
        int idx = space.index_of(label);
        if (idx < 0) throw ParseError("unknown basis element '" + label + "' in '" + expr + "'");
        v(idx) += coeff;
        pos = next;
    }
    return v;
}

GroupPoint parse_group_element(const std::string& spec, const MatrixGroupModel& model) {
    auto open = spec.find('(');
    auto close = spec.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw ParseError("element spec '" + spec + "' is not exp(...), diag-torus(...) or matrix(...)");
    std::string head = spec.substr(0, open);
    std::string arg = spec.substr(open + 1, close - open - 1);
    if (head == "exp") {
        return model.exp_point(parse_algebra_element(arg, model.algebra().space()));
    }
    if (head == "diag-torus") {
        if (model.name() != "su2")
            throw ParseError("diag-torus(...) is defined for the su2 model only");
        double theta = std::stod(arg);
        Eigen::VectorXd c = Eigen::VectorXd::Zero(model.n());
        c(2) = -2.0 * theta;  // diag(e^{i theta}, e^{-i theta}) = exp(-2 theta e3)
        return model.exp_point(c);
    }
    if (head == "matrix") {
        std::vector<double> vals;
        std::stringstream ss(arg);
        std::string tok;
        while (std::getline(ss, tok, ',')) vals.push_back(std::stod(tok));
        int m = model.rep_size();
        if (static_cast<int>(vals.size()) != m * m)
            throw ParseError("matrix(...) needs size*size entries");
        Eigen::MatrixXd g(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) g(i, j) = vals[i * m + j];
        return model.point(g);
    }
    throw ParseError("unknown element spec '" + head + "'");
}

ordered_json matrix_json(const Eigen::MatrixXd& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

ordered_json vector_json(const Eigen::VectorXd& v) {
    ordered_json row = ordered_json::array();
    for (int i = 0; i < v.size(); ++i) row.push_back(v(i));
    return row;
}

}  // namespace

int cmd_validate(const std::string& path, const CommonOptions& opt, std::ostream& out) {
    AlgebraFile file = load_algebra_file(path);
    Report rep = run_validate(file, opt);
    render(rep, report_to_json(rep, "validate", file, opt), opt, out);
    return rep.all_pass() ? 0 : 1;
}

int cmd_double(const std::string& path, const std::string& twist_spec,
               const std::string& out_path, const CommonOptions& opt, std::ostream& out) {
    AlgebraFile file = load_algebra_file(path);
    if (!file.model.algebra.K) {
        out << "error: '" << path << "' carries no bilinear form; cannot build the double\n";
        return 1;
    }
    std::optional<QuasiTriple> qt;
    try {
        qt = QuasiTriple::build_pair_from_metric(file.model.algebra);
    } catch (const std::exception& e) {
        out << "error: " << e.what() << "\n";
        return 1;
    }
    Twist t = parse_twist_spec(twist_spec, file.model.algebra.space());
    QuasiTriple chosen = t.is_zero() ? *qt : qt->with_twist(t);

    // Re-present the double in the basis adapted to the chosen complement, so
    // the emitted eps-eps brackets carry (F', phi') directly.
    QuasiTriple emitted = QuasiTriple::build_double(derive_quasibialgebra(chosen));
    models::AlgebraModel dbl;
    dbl.algebra = emitted.d();
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            out << "error: cannot open '" << out_path << "' for writing\n";
            return 1;
        }
        f << algebra_to_json(dbl);
    }

    Report rep = check_identities(chosen);
    ordered_json extra;
    extra["double"] = ordered_json{{"name", dbl.algebra.name},
                                   {"dimension", dbl.algebra.dim()},
                                   {"written_to", out_path}};
    ordered_json F_entries = ordered_json::array();
    const Cobracket& F = chosen.F();
    for (int i = 0; i < chosen.n(); ++i)
        for (int j = 0; j < chosen.n(); ++j)
            for (int k = j + 1; k < chosen.n(); ++k)
                if (!F.F(i, j, k).is_zero())
                    F_entries.push_back(ordered_json{
                        {"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"value", F.F(i, j, k).str()}});
    ordered_json phi_entries = ordered_json::array();
    Tensor3 phi_t = Tensor3::from_multivector(chosen.phi());
    for (int i = 0; i < chosen.n(); ++i)
        for (int j = i + 1; j < chosen.n(); ++j)
            for (int k = j + 1; k < chosen.n(); ++k)
                if (!phi_t.at(i, j, k).is_zero())
                    phi_entries.push_back(ordered_json{{"i", i + 1},
                                                       {"j", j + 1},
                                                       {"k", k + 1},
                                                       {"value", phi_t.at(i, j, k).str()}});
    extra["derived"] = ordered_json{{"F", F_entries}, {"phi", phi_entries}};
    render(rep, report_to_json(rep, "double", file, opt, extra), opt, out);
    return rep.all_pass() ? 0 : 1;
}

int cmd_verify(const std::string& path, const std::string& suite, const CommonOptions& opt,
               std::ostream& out) {
    AlgebraFile file = load_algebra_file(path);
    Report rep;
    if (suite == "algebra") {
        rep = suite_algebra(file, opt);
    } else if (suite == "group" || suite == "moment") {
        if (!file.model.has_rep())
            throw ParseError("suite '" + suite + "' requires representation matrices");
        if (!file.model.algebra.K)
            throw ParseError("suite '" + suite + "' requires a bilinear form");
        rep = (suite == "group") ? suite_group(file, opt) : suite_moment(file, opt);
    } else {
        throw ParseError("unknown suite '" + suite + "' (expected algebra, group, or moment)");
    }
    ordered_json extra;
    extra["suite"] = suite;
    render(rep, report_to_json(rep, "verify", file, opt, extra), opt, out);
    return rep.all_pass() ? 0 : 1;
}

int cmd_eval(const std::string& path, const std::string& at_spec, const std::string& object_spec,
             const std::string& twist_spec, const CommonOptions& opt, std::ostream& out) {
    AlgebraFile file = load_algebra_file(path);
    if (!file.model.has_rep()) throw ParseError("eval requires representation matrices");
    if (!file.model.algebra.K) throw ParseError("eval requires a bilinear form");
    DoubleGeometry geo{MatrixGroupModel(file.model)};
    const int n = geo.n();
    GroupPoint s = parse_group_element(at_spec, geo.model());
    Twist rational_t = parse_twist_spec(twist_spec, geo.model().algebra().space());
    Eigen::MatrixXd t = twist_to_eigen(rational_t.tensor());

    std::string object = object_spec;
    std::string arg;
    if (auto colon = object_spec.find(':'); colon != std::string::npos) {
        object = object_spec.substr(0, colon);
        arg = object_spec.substr(colon + 1);
    }

    ordered_json doc;
    doc["tool"] = kToolVersion;
    doc["command"] = "eval";
    doc["input"] = ordered_json{{"path", file.path}, {"digest", "fnv1a64:" + file.digest}};
    doc["at"] = at_spec;
    doc["object"] = object_spec;

    try {
        if (object == "PG") {
            doc["value"] = matrix_json(geo.P_G(s, t));
        } else if (object == "PS") {
            doc["value"] = matrix_json(geo.P_S(s, t));
        } else if (object == "phiS") {
            Multivector phi_field = geo.action_frame_field(geo.triple().phi());
            auto flat = geo.frame_eval3(phi_field, s);
            ordered_json cube = ordered_json::array();
            for (int a = 0; a < n; ++a) {
                ordered_json plane = ordered_json::array();
                for (int b = 0; b < n; ++b) {
                    ordered_json row = ordered_json::array();
                    for (int c = 0; c < n; ++c)
                        row.push_back(flat[(size_t(a) * n + b) * n + c]);
                    plane.push_back(row);
                }
                cube.push_back(plane);
            }
            doc["value"] = cube;
        } else if (object == "hat") {
            Eigen::VectorXd x = parse_algebra_element(arg, geo.model().algebra().space());
            doc["value"] = vector_json(geo.hat(x, s, t));
        } else if (object == "dressing") {
            Eigen::VectorXd X = parse_algebra_element(arg, geo.triple().d().space());
            doc["value"] = vector_json(geo.dressing_adapted(X, s));
        } else if (object == "tau") {
            doc["value"] = matrix_json(geo.tau(s, t));
        } else {
            throw ParseError("unknown object '" + object +
                             "' (expected PG, PS, phiS, hat:x, dressing:X, tau)");
        }
    } catch (const NonAdmissibleError& e) {
        doc["error"] = e.what();
        doc["margin"] = e.margin;
        out << doc.dump(2) << "\n";
        return 1;
    }
    out << doc.dump(2) << "\n";
    return 0;
}

}  // namespace manin::cli
