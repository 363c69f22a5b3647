#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "coringlab/document.hpp"

using namespace coringlab;
namespace wd = coringlab::doc;

namespace {

int exit_code_for(const Error& e) {
    return e.code.rfind("document.", 0) == 0 ? 2 : 1;
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

int load_document(const std::string& path, wd::SpecDocument& out) {
    std::string text;
    if (!read_file(path, text)) {
        std::cerr << "error: cannot read '" << path << "'\n";
        return 2;
    }
    wd::ParseResult r = wd::parse_document(text);
    if (!r.document) {
        for (const auto& diag : r.diagnostics)
            std::cerr << path << ":" << diag.line << ":" << diag.col << ": " << diag.message
                      << "\n";
        return 2;
    }
    out = std::move(*r.document);
    return 0;
}

int write_document(const wd::SpecDocument& d, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write '" << path << "'\n";
        return 2;
    }
    out << wd::emit_document(d);
    return 0;
}

Field parse_field_flag(const std::string& text) {
    if (text == "rational") return Field::rationals();
    if (text.rfind("prime:", 0) == 0) return Field::prime(mpz_class(text.substr(6)));
    throw Error("document.field", "unknown field '" + text + "' (use rational or prime:p)");
}

// re-emit the object a name refers to (with its dependencies) into a new doc
void copy_object(const wd::SpecDocument& src, wd::SpecDocument& dst, const std::string& name) {
    const wd::ObjectDecl* o = src.find_object(name);
    require(o != nullptr, "document.unknown_object", "no object named '" + name + "'");
    if (dst.find_object(name)) return;
    for (const auto& [k, a] : o->attrs) {
        if (a.kind != wd::Attr::Kind::ref) continue;
        if (src.find_object(a.text)) copy_object(src, dst, a.text);
        if (const VectorSpace* v = src.find_space(a.text)) wd::ensure_space(dst, a.text, *v);
        if (const wd::MapDecl* m = src.find_map(a.text)) {
            for (const auto& n : m->src) wd::ensure_space(dst, n, *src.find_space(n));
            for (const auto& n : m->dst) wd::ensure_space(dst, n, *src.find_space(n));
            wd::ensure_map(dst, a.text, m->src, m->dst, m->mat);
        }
    }
    for (const char* key : {"omega"}) {
        if (const wd::Attr* a = o->find(key))
            for (const auto& n : a->names)
                if (const VectorSpace* v = src.find_space(n)) wd::ensure_space(dst, n, *v);
    }
    for (const char* key : {"diffs"}) {
        if (const wd::Attr* a = o->find(key))
            for (const auto& n : a->names)
                if (const wd::MapDecl* m = src.find_map(n)) wd::ensure_map(dst, n, m->src, m->dst, m->mat);
    }
    if (const wd::Attr* a = o->find("products"))
        for (const auto& [pk, pv] : a->pairs)
            if (const wd::MapDecl* m = src.find_map(pv)) wd::ensure_map(dst, pv, m->src, m->dst, m->mat);
    wd::add_object(dst, name, *o);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for corings, entwining structures and C-rings"};
    app.require_subcommand(1);

    // ---- check ----
    auto* check = app.add_subcommand("check", "verify the axioms of document objects");
    std::string check_file, check_object;
    bool check_json = false;
    check->add_option("file", check_file, "document to check")->required();
    check->add_option("--object", check_object, "check a single object");
    check->add_flag("--json", check_json, "machine-readable report");

    // ---- build ----
    auto* build = app.add_subcommand("build", "run a construction and write the result");
    std::string build_kind, build_file, build_out, build_name = "out";
    std::string b_algebra, b_coring, b_grouplike, b_dga, b_hopf, b_entwining, b_character;
    std::string b_coalgebra, b_cointegral, b_cring, b_bialgebra, b_alpha, b_beta, b_lact, b_ract;
    std::string b_grouplike_coords;
    int build_degree = 3;
    build->add_option("kind", build_kind,
                      "sweedler|envelope|roiter|coring-from-dga|ayd|alpha-beta|"
                      "coring-from-entwining|cring-from-entwining|universal-coderivation|"
                      "coseparable-connection|complex")
        ->required();
    build->add_option("--file", build_file, "input document")->required();
    build->add_option("--out", build_out, "output document")->required();
    build->add_option("--name", build_name, "name of the built object");
    build->add_option("--degree", build_degree, "truncation degree (default 3)");
    build->add_option("--algebra", b_algebra);
    build->add_option("--coring", b_coring);
    build->add_option("--grouplike", b_grouplike);
    build->add_option("--dga", b_dga);
    build->add_option("--hopf", b_hopf);
    build->add_option("--entwining", b_entwining);
    build->add_option("--character", b_character);
    build->add_option("--coalgebra", b_coalgebra);
    build->add_option("--cointegral", b_cointegral);
    build->add_option("--cring", b_cring);
    build->add_option("--bialgebra", b_bialgebra);
    build->add_option("--alpha", b_alpha);
    build->add_option("--beta", b_beta);
    build->add_option("--left-action", b_lact);
    build->add_option("--right-action", b_ract);
    build->add_option("--grouplike-coords", b_grouplike_coords,
                      "comma-separated coalgebra group-like coordinates");

    // ---- convert ----
    auto* convert = app.add_subcommand("convert", "apply a correspondence and write the result");
    std::string conv_kind, conv_file, conv_out, conv_name = "out";
    std::string c_coring, c_grouplike, c_comodule, c_module, c_cring, c_character, c_connection;
    std::string c_coderivation, c_retraction;
    int conv_degree = 3;
    convert->add_option("kind", conv_kind,
                        "coaction-to-connection|connection-to-coaction|action-to-connection|"
                        "connection-to-action|right-to-left|retraction-to-connection|"
                        "connection-to-retraction")
        ->required();
    convert->add_option("--file", conv_file, "input document")->required();
    convert->add_option("--out", conv_out, "output document")->required();
    convert->add_option("--name", conv_name, "name of the produced object");
    convert->add_option("--degree", conv_degree, "truncation degree (default 3)");
    convert->add_option("--coring", c_coring);
    convert->add_option("--grouplike", c_grouplike);
    convert->add_option("--comodule", c_comodule);
    convert->add_option("--module", c_module);
    convert->add_option("--cring", c_cring);
    convert->add_option("--character", c_character);
    convert->add_option("--connection", c_connection);
    convert->add_option("--coderivation", c_coderivation);
    convert->add_option("--retraction", c_retraction);

    // ---- examples ----
    auto* examples = app.add_subcommand("examples", "list or emit built-in example documents");
    std::string ex_action = "list", ex_name, ex_out, ex_field = "rational";
    examples->add_option("action", ex_action, "list|emit");
    examples->add_option("name", ex_name, "example name (for emit)");
    examples->add_option("--out", ex_out, "write to file instead of stdout");
    examples->add_option("--field", ex_field, "rational|prime:p");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*check) {
            wd::SpecDocument d;
            if (int rc = load_document(check_file, d)) return rc;
            wd::Workbench w(std::move(d));
            std::vector<std::string> names =
                check_object.empty() ? w.object_names() : std::vector<std::string>{check_object};
            bool all_ok = true;
            std::ostringstream js;
            js << "[";
            for (size_t i = 0; i < names.size(); ++i) {
                Report rep = w.check_object(names[i]);
                all_ok = all_ok && rep.ok();
                if (check_json)
                    js << (i ? "," : "") << rep.json();
                else
                    std::cout << rep.text();
            }
            if (check_json) std::cout << js.str() << "]\n";
            return all_ok ? 0 : 1;
        }

        if (*build) {
            wd::SpecDocument in;
            if (int rc = load_document(build_file, in)) return rc;
            wd::Workbench w(in);
            wd::SpecDocument out;
            out.field = in.field;
            if (build_kind == "sweedler") {
                Algebra a = w.algebra(b_algebra);
                copy_object(in, out, b_algebra);
                Coring c = sweedler_coring(a);
                wd::emit_coring(out, build_name == "out" ? "C" : build_name, b_algebra,
                                build_name == "out" ? "C" : build_name, c);
                wd::emit_grouplike(out, "g", build_name == "out" ? "C" : build_name,
                                   catalog::one_tensor_one(a), GrouplikeFlavor::grouplike);
            } else if (build_kind == "envelope") {
                Algebra a = w.algebra(b_algebra);
                copy_object(in, out, b_algebra);
                wd::emit_dga(out, build_name == "out" ? "omega" : build_name, b_algebra,
                             universal_envelope(a, build_degree));
            } else if (build_kind == "roiter") {
                Coring c = w.coring(b_coring);
                std::vector<Rat> g = w.grouplike_vector(b_grouplike);
                GrouplikeFlavor fl = w.grouplike_flavor(b_grouplike);
                RoiterData R = roiter_dga(c, g, build_degree, fl);
                const std::string& algref = in.find_object(b_coring)->ref("algebra");
                copy_object(in, out, algref);
                wd::emit_dga(out, build_name == "out" ? "omega" : build_name, algref, R.dga);
            } else if (build_kind == "coring-from-dga") {
                TruncatedDGA dga = w.dga(b_dga);
                CoringWithGrouplike cg = coring_from_dga(dga);
                const std::string& algref = in.find_object(b_dga)->ref("algebra");
                copy_object(in, out, algref);
                std::string cname = build_name == "out" ? "C" : build_name;
                wd::emit_coring(out, cname, algref, cname + ".space", cg.coring);
                wd::emit_grouplike(out, "g", cname, cg.g.g, GrouplikeFlavor::grouplike);
            } else if (build_kind == "ayd") {
                HopfAlgebra h = w.hopf(b_hopf);
                copy_object(in, out, b_hopf);
                wd::emit_entwining(out, build_name == "out" ? "E" : build_name, b_hopf, b_hopf,
                                   ayd_entwining(h));
            } else if (build_kind == "alpha-beta") {
                AlphaBetaDatum D{w.bialgebra(b_bialgebra), w.coalgebra(b_coalgebra),
                                 Bimodule{w.coalgebra(b_coalgebra).space, w.map(b_lact),
                                          w.map(b_ract)},
                                 w.map(b_alpha), w.map(b_beta)};
                Entwining e = alpha_beta_entwining(D);
                copy_object(in, out, b_bialgebra);
                copy_object(in, out, b_coalgebra);
                wd::emit_entwining(out, build_name == "out" ? "E" : build_name, b_bialgebra,
                                   b_coalgebra, e);
            } else if (build_kind == "coring-from-entwining") {
                Entwining e = w.entwining(b_entwining);
                Coring c = coring_from_entwining(e);
                const std::string& algref = in.find_object(b_entwining)->ref("algebra");
                copy_object(in, out, algref);
                std::string cname = build_name == "out" ? "C" : build_name;
                wd::emit_coring(out, cname, algref, cname + ".space", c);
                if (!b_grouplike_coords.empty()) {
                    std::vector<Rat> coords;
                    std::stringstream ss(b_grouplike_coords);
                    std::string tok;
                    while (std::getline(ss, tok, ','))
                        coords.push_back(in.field.parse_scalar(tok));
                    wd::emit_grouplike(out, "g", cname, entwined_coring_grouplike(e, coords),
                                       GrouplikeFlavor::grouplike);
                }
            } else if (build_kind == "cring-from-entwining") {
                Entwining e = w.entwining(b_entwining);
                std::optional<LinearMap> chi;
                if (!b_character.empty()) chi = w.character(b_character).kappa;
                CRingWithCharacter r = cring_from_entwining(e, chi);
                const std::string& coaref = in.find_object(b_entwining)->ref("coalgebra");
                copy_object(in, out, coaref);
                std::string rname = build_name == "out" ? "R" : build_name;
                wd::emit_cring(out, rname, coaref, rname + ".space", r.ring);
                if (r.kappa) wd::emit_character(out, "kappa", rname, true, r.kappa->kappa);
            } else if (build_kind == "universal-coderivation") {
                Coalgebra c = w.coalgebra(b_coalgebra);
                UniversalCoderivation U = universal_coderivation(c);
                copy_object(in, out, b_coalgebra);
                std::string dn = build_name == "out" ? "D" : build_name;
                std::string cspace = in.find_object(b_coalgebra)->ref("space");
                wd::ensure_space(out, dn + ".L", U.D.L.space);
                wd::ensure_map(out, dn + ".lcoact", {dn + ".L"}, {cspace, dn + ".L"},
                               U.D.L.lcoact.m);
                wd::ensure_map(out, dn + ".rcoact", {dn + ".L"}, {dn + ".L", cspace},
                               U.D.L.rcoact.m);
                wd::ObjectDecl bo;
                bo.kind = "bicomodule";
                bo.attrs = {{"coalgebra", wd::Attr::ref(b_coalgebra)},
                            {"space", wd::Attr::ref(dn + ".L")},
                            {"left_coaction", wd::Attr::ref(dn + ".lcoact")},
                            {"right_coaction", wd::Attr::ref(dn + ".rcoact")}};
                wd::add_object(out, dn + ".bicomodule", std::move(bo));
                wd::ensure_map(out, dn + ".lambda", {dn + ".L"}, {cspace}, U.D.lambda.m);
                wd::ensure_map(out, dn + ".extension", {dn + ".L", dn + ".L"}, {dn + ".L"},
                               compose(U.D.lambda_prime, U.D.LL.sub.retr).m);
                wd::ObjectDecl co;
                co.kind = "coderivation";
                co.attrs = {{"coalgebra", wd::Attr::ref(b_coalgebra)},
                            {"bicomodule", wd::Attr::ref(dn + ".bicomodule")},
                            {"lambda", wd::Attr::ref(dn + ".lambda")},
                            {"extension", wd::Attr::ref(dn + ".extension")}};
                wd::add_object(out, dn, std::move(co));
            } else if (build_kind == "coseparable-connection") {
                Coalgebra c = w.coalgebra(b_coalgebra);
                Cointegral del = w.cointegral(b_cointegral);
                UniversalCoderivation U = universal_coderivation(c);
                BicomoduleConnection bc = coseparable_right_connection(c, del, U);
                copy_object(in, out, b_coalgebra);
                std::string dn = build_name == "out" ? "conn" : build_name;
                std::string cspace = in.find_object(b_coalgebra)->ref("space");
                wd::ensure_space(out, dn + ".L", U.D.L.space);
                wd::ensure_map(out, dn + ".lcoact", {dn + ".L"}, {cspace, dn + ".L"},
                               U.D.L.lcoact.m);
                wd::ensure_map(out, dn + ".rcoact", {dn + ".L"}, {dn + ".L", cspace},
                               U.D.L.rcoact.m);
                wd::ObjectDecl bo;
                bo.kind = "bicomodule";
                bo.attrs = {{"coalgebra", wd::Attr::ref(b_coalgebra)},
                            {"space", wd::Attr::ref(dn + ".L")},
                            {"left_coaction", wd::Attr::ref(dn + ".lcoact")},
                            {"right_coaction", wd::Attr::ref(dn + ".rcoact")}};
                wd::add_object(out, dn + ".bicomodule", std::move(bo));
                wd::ensure_map(out, dn + ".lambda", {dn + ".L"}, {cspace}, U.D.lambda.m);
                wd::ensure_map(out, dn + ".extension", {dn + ".L", dn + ".L"}, {dn + ".L"},
                               compose(U.D.lambda_prime, U.D.LL.sub.retr).m);
                wd::ObjectDecl co;
                co.kind = "coderivation";
                co.attrs = {{"coalgebra", wd::Attr::ref(b_coalgebra)},
                            {"bicomodule", wd::Attr::ref(dn + ".bicomodule")},
                            {"lambda", wd::Attr::ref(dn + ".lambda")},
                            {"extension", wd::Attr::ref(dn + ".extension")}};
                wd::add_object(out, dn + ".D", std::move(co));
                auto emit_conn = [&](const std::string& cname, const LinearMap& nab,
                                     const std::string& side, const LinearMap& coact) {
                    wd::ensure_map(out, cname + ".nabla", {dn + ".L", dn + ".L"}, {dn + ".L"},
                                   compose(nab, U.D.LL.sub.retr).m);
                    wd::ensure_map(out, cname + ".coact", {dn + ".L"},
                                   side == "right"
                                       ? std::vector<std::string>{dn + ".L", cspace}
                                       : std::vector<std::string>{cspace, dn + ".L"},
                                   coact.m);
                    wd::ObjectDecl oc;
                    oc.kind = "connection";
                    oc.attrs = {{"flavor", wd::Attr::enum_text("coderivation")},
                                {"coderivation", wd::Attr::ref(dn + ".D")},
                                {"side", wd::Attr::enum_text(side)},
                                {"space", wd::Attr::ref(dn + ".L")},
                                {"coaction", wd::Attr::ref(cname + ".coact")},
                                {"nabla", wd::Attr::ref(cname + ".nabla")}};
                    wd::add_object(out, cname, std::move(oc));
                };
                emit_conn(dn + ".right", bc.nabla_r, "right", U.D.L.rcoact);
                emit_conn(dn + ".left", bc.nabla_l, "left", U.D.L.lcoact);
            } else if (build_kind == "complex") {
                CRing r = w.cring(b_cring);
                Character k = w.character(b_character);
                CoderivationComplex X = coderivation_complex(r, k, build_degree);
                const std::string& coaref = in.find_object(b_cring)->ref("coalgebra");
                copy_object(in, out, coaref);
                std::string dn = build_name == "out" ? "D" : build_name;
                std::string cspace = in.find_object(coaref)->ref("space");
                wd::ensure_space(out, dn + ".Abar", X.Abar.repr);
                wd::ensure_map(out, dn + ".lcoact", {dn + ".Abar"}, {cspace, dn + ".Abar"},
                               X.Abar_bi.lcoact.m);
                wd::ensure_map(out, dn + ".rcoact", {dn + ".Abar"}, {dn + ".Abar", cspace},
                               X.Abar_bi.rcoact.m);
                wd::ObjectDecl bo;
                bo.kind = "bicomodule";
                bo.attrs = {{"coalgebra", wd::Attr::ref(coaref)},
                            {"space", wd::Attr::ref(dn + ".Abar")},
                            {"left_coaction", wd::Attr::ref(dn + ".lcoact")},
                            {"right_coaction", wd::Attr::ref(dn + ".rcoact")}};
                wd::add_object(out, dn + ".bicomodule", std::move(bo));
                wd::ensure_map(out, dn + ".lambda", {dn + ".Abar"}, {cspace}, X.D.lambda.m);
                wd::ensure_map(out, dn + ".extension", {dn + ".Abar", dn + ".Abar"},
                               {dn + ".Abar"}, compose(X.D.lambda_prime, X.D.LL.sub.retr).m);
                wd::ObjectDecl co;
                co.kind = "coderivation";
                co.attrs = {{"coalgebra", wd::Attr::ref(coaref)},
                            {"bicomodule", wd::Attr::ref(dn + ".bicomodule")},
                            {"lambda", wd::Attr::ref(dn + ".lambda")},
                            {"extension", wd::Attr::ref(dn + ".extension")}};
                wd::add_object(out, dn, std::move(co));
            } else {
                std::cerr << "error: unknown build kind '" << build_kind << "'\n";
                return 2;
            }
            return write_document(out, build_out);
        }

        if (*convert) {
            wd::SpecDocument in;
            if (int rc = load_document(conv_file, in)) return rc;
            wd::Workbench w(in);
            wd::SpecDocument out;
            out.field = in.field;
            if (conv_kind == "coaction-to-connection") {
                Coring c = w.coring(c_coring);
                std::vector<Rat> g = w.grouplike_vector(c_grouplike);
                GrouplikeFlavor fl = w.grouplike_flavor(c_grouplike);
                RoiterData R = roiter_dga(c, g, conv_degree, fl);
                const wd::ObjectDecl* mo = in.find_object(c_comodule);
                require(mo && mo->kind == "comodule" && mo->find("coring"),
                        "document.kind", "expected a comodule over a coring");
                RightModule m{w.space(mo->ref("space")), w.map(mo->ref("action"))};
                const wd::Attr* cu = mo->find("counital");
                CoringComodule cm =
                    make_coring_comodule(c, m, w.map(mo->ref("coaction")), cu ? cu->flag : true);
                ModuleConnection conn = connection_from_coaction(R, cm);
                copy_object(in, out, c_coring);
                copy_object(in, out, c_grouplike);
                // the underlying module object
                std::string mod_name = c_comodule + ".module";
                std::string mspace = mo->ref("space");
                wd::ensure_space(out, mspace, w.space(mspace));
                wd::ensure_map(out, mo->ref("action"), in.find_map(mo->ref("action"))->src,
                               in.find_map(mo->ref("action"))->dst, m.act.m);
                wd::ObjectDecl md;
                md.kind = "module";
                md.attrs = {{"algebra", wd::Attr::ref(in.find_object(c_coring)->ref("algebra"))},
                            {"side", wd::Attr::enum_text("right")},
                            {"space", wd::Attr::ref(mspace)},
                            {"action", wd::Attr::ref(mo->ref("action"))}};
                wd::add_object(out, mod_name, std::move(md));
                wd::emit_module_connection(out, conv_name, c_coring, c_grouplike, mod_name, R,
                                           conn);
            } else if (conv_kind == "connection-to-coaction") {
                const wd::ObjectDecl* co = in.find_object(c_connection);
                require(co && co->kind == "connection" && co->find("flavor") &&
                            co->find("flavor")->text == "module",
                        "document.kind", "expected a module-flavour connection");
                Coring c = w.coring(co->ref("coring"));
                std::vector<Rat> g = w.grouplike_vector(co->ref("grouplike"));
                GrouplikeFlavor fl = w.grouplike_flavor(co->ref("grouplike"));
                int degree = static_cast<int>(co->find("degree")->integer);
                RoiterData R = roiter_dga(c, g, degree, fl);
                const wd::ObjectDecl* mo = in.find_object(co->ref("module"));
                RightModule m{w.space(mo->ref("space")), w.map(mo->ref("action"))};
                LinearMap amb = w.map(co->ref("nabla"));
                LinearMap idm = identity_map(in.field, m.space);
                QuotientSpace MO1 = tensor_relations_quotient(
                    in.field, m.space, R.dga.omega[1], m.act, dga_product(R.dga, 0, 1));
                LinearMap nabla =
                    compose(MO1.proj, compose(kron(idm, R.omega1_sub.retr), amb));
                ModuleConnection conn = make_module_connection(R.dga, m, nabla);
                CoringComodule cm = coaction_from_connection(R, conn);
                copy_object(in, out, co->ref("coring"));
                wd::emit_coring_comodule(out, conv_name, co->ref("coring"), mo->ref("space"), c,
                                         cm);
            } else if (conv_kind == "action-to-connection") {
                CRing r = w.cring(c_cring);
                Character k = w.character(c_character);
                CoderivationComplex X = coderivation_complex(r, k, conv_degree);
                const wd::ObjectDecl* mo = in.find_object(c_module);
                require(mo && mo->kind == "module" && mo->find("cring"), "document.kind",
                        "expected a module over a C-ring");
                RightComodule m{w.space(mo->ref("space")), w.map(mo->ref("coaction"))};
                CRingModule cm = make_cring_module_ambient(r, m, w.map(mo->ref("action")));
                ComoduleConnection conn = connection_from_action(r, k, X, cm);
                copy_object(in, out, c_cring);
                copy_object(in, out, c_character);
                wd::emit_cring_connection(out, conv_name, c_cring, c_character, mo->ref("space"),
                                          conv_degree, r, conn);
            } else if (conv_kind == "connection-to-action") {
                const wd::ObjectDecl* co = in.find_object(c_connection);
                require(co && co->kind == "connection" && co->find("flavor") &&
                            co->find("flavor")->text == "cring",
                        "document.kind", "expected a cring-flavour connection");
                CRing r = w.cring(co->ref("cring"));
                Character k = w.character(co->ref("character"));
                int degree = static_cast<int>(co->find("degree")->integer);
                CoderivationComplex X = coderivation_complex(r, k, degree);
                RightComodule m{w.space(co->ref("space")), w.map(co->ref("coaction"))};
                LinearMap amb = w.map(co->ref("nabla"));
                ComoduleConnection conn;
                conn.side = ComoduleConnection::Side::right;
                conn.mspace = m.space;
                conn.coact = m.coact;
                conn.ML = cotensor(r.C, m, X.Abar_bi);
                conn.nabla = compose(amb, conn.ML.sub.incl);
                CRingModule cm = action_from_connection(r, k, X, conn);
                copy_object(in, out, co->ref("cring"));
                wd::emit_cring_module(out, conv_name, co->ref("cring"), co->ref("space"), r, cm);
            } else if (conv_kind == "right-to-left") {
                Coderivation D = w.coderivation(c_coderivation);
                const wd::ObjectDecl* co = in.find_object(c_connection);
                require(co && co->kind == "connection", "document.kind", "expected a connection");
                LinearMap amb = w.map(co->ref("nabla"));
                LinearMap nr = compose(amb, D.LL.sub.incl);
                LinearMap nl = left_from_right(D, nr);
                copy_object(in, out, c_coderivation);
                std::string cspace =
                    in.find_object(in.find_object(c_coderivation)->ref("coalgebra"))->ref("space");
                std::string lspace =
                    in.find_object(in.find_object(c_coderivation)->ref("bicomodule"))->ref("space");
                wd::ensure_map(out, conv_name + ".nabla", {lspace, lspace}, {lspace},
                               compose(nl, D.LL.sub.retr).m);
                wd::ensure_map(out, conv_name + ".coact", {lspace}, {cspace, lspace},
                               D.L.lcoact.m);
                wd::ObjectDecl oc;
                oc.kind = "connection";
                oc.attrs = {{"flavor", wd::Attr::enum_text("coderivation")},
                            {"coderivation", wd::Attr::ref(c_coderivation)},
                            {"side", wd::Attr::enum_text("left")},
                            {"space", wd::Attr::ref(lspace)},
                            {"coaction", wd::Attr::ref(conv_name + ".coact")},
                            {"nabla", wd::Attr::ref(conv_name + ".nabla")}};
                wd::add_object(out, conv_name, std::move(oc));
            } else if (conv_kind == "retraction-to-connection") {
                const wd::ObjectDecl* mo = in.find_object(c_comodule);
                require(mo && mo->kind == "comodule" && !mo->find("coring"), "document.kind",
                        "expected a comodule over a coalgebra");
                Coalgebra c = w.coalgebra(mo->ref("coalgebra"));
                RightComodule m{w.space(mo->ref("space")), w.map(mo->ref("coaction"))};
                UniversalCoderivation U = universal_coderivation(c);
                ComoduleConnection conn = connection_from_retraction(U, m, w.map(c_retraction));
                copy_object(in, out, mo->ref("coalgebra"));
                copy_object(in, out, c_comodule);
                std::string cname = mo->ref("coalgebra");
                std::string dn = conv_name + ".D";
                std::string cspace = in.find_object(cname)->ref("space");
                wd::ensure_space(out, dn + ".L", U.D.L.space);
                wd::ensure_map(out, dn + ".lcoact", {dn + ".L"}, {cspace, dn + ".L"},
                               U.D.L.lcoact.m);
                wd::ensure_map(out, dn + ".rcoact", {dn + ".L"}, {dn + ".L", cspace},
                               U.D.L.rcoact.m);
                wd::ObjectDecl bo;
                bo.kind = "bicomodule";
                bo.attrs = {{"coalgebra", wd::Attr::ref(cname)},
                            {"space", wd::Attr::ref(dn + ".L")},
                            {"left_coaction", wd::Attr::ref(dn + ".lcoact")},
                            {"right_coaction", wd::Attr::ref(dn + ".rcoact")}};
                wd::add_object(out, dn + ".bicomodule", std::move(bo));
                wd::ensure_map(out, dn + ".lambda", {dn + ".L"}, {cspace}, U.D.lambda.m);
                wd::ensure_map(out, dn + ".extension", {dn + ".L", dn + ".L"}, {dn + ".L"},
                               compose(U.D.lambda_prime, U.D.LL.sub.retr).m);
                wd::ObjectDecl cd;
                cd.kind = "coderivation";
                cd.attrs = {{"coalgebra", wd::Attr::ref(cname)},
                            {"bicomodule", wd::Attr::ref(dn + ".bicomodule")},
                            {"lambda", wd::Attr::ref(dn + ".lambda")},
                            {"extension", wd::Attr::ref(dn + ".extension")}};
                wd::add_object(out, dn, std::move(cd));
                std::string mspace = mo->ref("space");
                wd::ensure_map(out, conv_name + ".nabla", {mspace, dn + ".L"}, {mspace},
                               compose(conn.nabla, conn.ML.sub.retr).m);
                wd::ObjectDecl oc;
                oc.kind = "connection";
                oc.attrs = {{"flavor", wd::Attr::enum_text("coderivation")},
                            {"coderivation", wd::Attr::ref(dn)},
                            {"side", wd::Attr::enum_text("right")},
                            {"space", wd::Attr::ref(mspace)},
                            {"coaction", wd::Attr::ref(mo->ref("coaction"))},
                            {"nabla", wd::Attr::ref(conv_name + ".nabla")}};
                wd::add_object(out, conv_name, std::move(oc));
            } else if (conv_kind == "connection-to-retraction") {
                const wd::ObjectDecl* co = in.find_object(c_connection);
                require(co && co->kind == "connection" && co->find("flavor") &&
                            co->find("flavor")->text == "coderivation",
                        "document.kind", "expected a coderivation-flavour connection");
                Coderivation D = w.coderivation(co->ref("coderivation"));
                const std::string& cname = in.find_object(co->ref("coderivation"))->ref("coalgebra");
                Coalgebra c = w.coalgebra(cname);
                UniversalCoderivation U = universal_coderivation(c);
                require(mat_equal(U.D.lambda.m, D.lambda.m) &&
                            mat_equal(U.D.L.lcoact.m, D.L.lcoact.m) &&
                            mat_equal(U.D.L.rcoact.m, D.L.rcoact.m),
                        "document.kind",
                        "retraction extraction needs the universal coderivation");
                RightComodule m{w.space(co->ref("space")), w.map(co->ref("coaction"))};
                CotensorSpace ML = cotensor(c, m, U.D.L);
                ComoduleConnection conn =
                    make_right_connection(U.D, m, compose(w.map(co->ref("nabla")), ML.sub.incl));
                LinearMap sigma = retraction_from_connection(U, m, conn);
                copy_object(in, out, cname);
                std::string mspace = co->ref("space");
                wd::ensure_space(out, mspace, w.space(mspace));
                std::string cspace = in.find_object(cname)->ref("space");
                wd::ensure_map(out, conv_name, {mspace, cspace}, {mspace}, sigma.m);
            } else {
                std::cerr << "error: unknown convert kind '" << conv_kind << "'\n";
                return 2;
            }
            return write_document(out, conv_out);
        }

        if (*examples) {
            if (ex_action == "list") {
                for (const auto& n : wd::example_names()) std::cout << n << "\n";
                return 0;
            }
            if (ex_action == "emit") {
                if (ex_name.empty()) {
                    std::cerr << "error: examples emit needs a name\n";
                    return 2;
                }
                Field F = parse_field_flag(ex_field);
                wd::SpecDocument d = wd::example_document(ex_name, F);
                // catalog contents pass their own checkers at emission time
                wd::Workbench w(d);
                for (const auto& obj : w.object_names()) {
                    Report rep = w.check_object(obj);
                    if (!rep.ok()) {
                        std::cerr << rep.text();
                        return 1;
                    }
                }
                if (ex_out.empty()) {
                    std::cout << wd::emit_document(d);
                    return 0;
                }
                return write_document(d, ex_out);
            }
            std::cerr << "error: examples action must be list or emit\n";
            return 2;
        }
    } catch (const Error& e) {
        std::cerr << "error [" << e.code << "]: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
