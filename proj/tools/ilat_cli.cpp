// Command-line surface for the involutive-lattice toolkit.
// Exit codes: 0 = property holds / success, 1 = property fails (witness on
// stdout), 2 = input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qops/catalog.hpp"
#include "qops/classify.hpp"
#include "qops/commute.hpp"
#include "qops/constructs.hpp"
#include "qops/enumerate.hpp"
#include "qops/io.hpp"
#include "qops/refmat.hpp"
#include "qops/spectral.hpp"
#include "qops/subalg.hpp"
#include "qops/verify.hpp"

namespace {

using namespace qops;

std::string elem_name(const Poset& p, int x) {
    if (x < 0) return "-";
    std::string l = p.label(x);
    return l.empty() ? std::to_string(x) : l;
}

Poset load(const std::string& path) { return load_ilat(path); }

int run_check(const std::string& file, const std::string& cls) {
    Poset p = load(file);
    if (cls.empty()) {
        std::cout << classify(p).summary() << "\n";
        return 0;
    }
    Check c = check_class(p, cls);
    if (c.ok) {
        std::cout << cls << " holds\n";
        return 0;
    }
    std::cout << cls << " fails at (" << elem_name(p, c.witness[0]);
    for (int i = 1; i < 3; ++i)
        if (c.witness[i] >= 0) std::cout << "," << elem_name(p, c.witness[i]);
    std::cout << ")\n";
    return 1;
}

std::string set_names(const Poset& p, Bits s) {
    std::string out = "{";
    bool first = true;
    for (Bits b = s; b; b &= b - 1) {
        if (!first) out += ",";
        out += elem_name(p, lowest_bit(b));
        first = false;
    }
    return out + "}";
}

int run_spectral(const std::string& sub, const std::vector<std::string>& files, int samples,
                 int dim, std::uint64_t seed) {
    auto read_effect = [](const std::string& path) {
        std::ifstream f(path);
        if (!f) throw std::runtime_error("cannot open " + path);
        std::ostringstream buf;
        buf << f.rdbuf();
        return parse_effect(buf.str());
    };
    if (sub == "verify") {
        auto res = spectral_verify(samples, dim, seed);
        if (res.violations == 0) {
            std::cout << "ok: " << res.samples << " samples clean\n";
            return 0;
        }
        std::cout << res.violations << " violations; first: " << res.first_failure << "\n";
        return 1;
    }
    if (sub == "neg" || sub == "sharp") {
        SpectralEffect a = read_effect(files.at(0));
        if (sub == "neg") {
            std::cout << emit_effect(spectral_neg(a));
            return 0;
        }
        bool s = spectral_sharp(a);
        std::cout << (s ? "sharp" : "unsharp") << "\n";
        return s ? 0 : 1;
    }
    SpectralEffect a = read_effect(files.at(0));
    SpectralEffect b = read_effect(files.at(1));
    if (a.d != b.d) throw std::runtime_error("dimension mismatch");
    if (sub == "leq") {
        bool le = spectral_leq(a, b);
        std::cout << (le ? "leq" : "not leq") << "\n";
        return le ? 0 : 1;
    }
    if (sub == "join") std::cout << emit_effect(spectral_join(a, b));
    else if (sub == "meet") std::cout << emit_effect(spectral_meet(a, b));
    else throw CLI::ValidationError("unknown spectral subcommand");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite involutive-poset and spectral-effect checker"};
    app.require_subcommand(1);

    std::string file, cls, name, sub, out_path;
    std::vector<std::string> files;
    int x = -1, y = -1, n = 0, samples = 1000, dim = 2;
    std::uint64_t seed = 0;

    auto* c_check = app.add_subcommand("check", "classify a structure or test one class");
    c_check->add_option("file", file)->required();
    c_check->add_option("--class", cls, "one of: " + [] {
        std::string s;
        for (const auto& k : known_classes()) s += (s.empty() ? "" : "|") + k;
        return s;
    }());

    auto* c_blocks = app.add_subcommand("blocks", "maximal distributive subuniverses");
    c_blocks->add_option("file", file)->required();
    auto* c_tame = app.add_subcommand("tame", "comparable pairs lie in common blocks");
    c_tame->add_option("file", file)->required();
    auto* c_forb = app.add_subcommand("forbidden", "forbidden-configuration search");
    c_forb->add_option("file", file)->required();

    auto* c_comm = app.add_subcommand("commute", "commutation report for a pair");
    c_comm->add_option("file", file)->required();
    c_comm->add_option("x", x)->required();
    c_comm->add_option("y", y)->required();

    auto* c_cons = app.add_subcommand("construct", "derived structures");
    c_cons->add_option("kind", sub, "sum|product|moisil|sh|localizer|residual")->required();
    c_cons->add_option("files", files, "input file(s)");
    c_cons->add_option("--x", x);
    c_cons->add_option("--y", y);

    auto* c_spec = app.add_subcommand("spectral", "spectral-order effect operations");
    c_spec->add_option("kind", sub, "leq|join|meet|neg|sharp|verify")->required();
    c_spec->add_option("files", files, "effect file(s)");
    c_spec->add_option("--samples", samples);
    c_spec->add_option("--dim", dim);
    c_spec->add_option("--seed", seed);

    auto* c_ref = app.add_subcommand("refmat", "referential-matrix operations");
    c_ref->add_option("kind", sub, "build|represent|entail")->required();
    c_ref->add_option("file", file);
    c_ref->add_option("--gamma", files, "premise formulas");
    c_ref->add_option("--phi", cls, "conclusion formula");
    c_ref->add_flag("--structural", out_path, "use the substitution-invariant relation")
        ->expected(0);

    auto* c_enum = app.add_subcommand("enumerate", "models up to isomorphism");
    c_enum->add_option("n", n)->required();
    c_enum->add_option("--class", cls);

    auto* c_cat = app.add_subcommand("catalog", "named structures");
    c_cat->add_option("kind", sub, "list|emit")->required();
    c_cat->add_option("name", name);

    auto* c_dot = app.add_subcommand("dot", "Hasse diagram in Graphviz syntax");
    c_dot->add_option("file", file)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_check->parsed()) return run_check(file, cls);
        if (c_blocks->parsed()) {
            Lattice l = as_lattice(load(file));
            for (Bits b : kleene_blocks(l)) std::cout << set_names(l.base, b) << "\n";
            return 0;
        }
        if (c_tame->parsed()) {
            Lattice l = as_lattice(load(file));
            TameReport t = is_tame(l);
            if (t.tame) {
                std::cout << "tame\n";
                return 0;
            }
            std::cout << "not tame: pair (" << elem_name(l.base, t.x) << ","
                      << elem_name(l.base, t.y) << ") lies in no common block\n";
            return 1;
        }
        if (c_forb->parsed()) {
            Lattice l = as_lattice(load(file));
            ForbiddenWitness w = forbidden_configuration(l);
            if (w.kind == ForbiddenKind::None) {
                std::cout << "none\n";
                return 0;
            }
            std::cout << forbidden_kind_name(w.kind) << " on subuniverse "
                      << set_names(l.base, w.subuniverse) << "\n";
            return 1;
        }
        if (c_comm->parsed()) {
            Lattice l = as_lattice(load(file));
            if (x < 0 || x >= l.n() || y < 0 || y >= l.n())
                throw std::runtime_error("element index out of range");
            CommutationReport r = commutation(l, x, y);
            std::cout << "c1=" << r.c1 << " c2=" << r.c2 << " c3=" << r.c3 << "\n";
            return r.commutes() ? 0 : 1;
        }
        if (c_cons->parsed()) {
            if (sub == "product") {
                Lattice a = as_lattice(load(files.at(0)));
                Lattice b = as_lattice(load(files.at(1)));
                std::cout << emit_ilat(direct_product(a, b).base);
                return 0;
            }
            Lattice l = as_lattice(load(files.at(0)));
            if (sub == "sum") std::cout << emit_ilat(ordinal_sum(l).base);
            else if (sub == "moisil") std::cout << emit_ilat(moisil_interval(l).base);
            else if (sub == "sh") std::cout << emit_ilat(sh_poset(l));
            else if (sub == "localizer") {
                if (x < 0 || y < 0) throw std::runtime_error("localizer needs --x and --y");
                std::cout << emit_ilat(localizer(l, x, y).lat.base);
            } else if (sub == "residual") {
                auto g = sasaki_piecewise(l);
                auto r = is_left_residuated(l, g);
                if (r.ok) {
                    std::cout << "left-residuated\n";
                    return 0;
                }
                std::cout << "not left-residuated at (" << elem_name(l.base, r.x) << ","
                          << elem_name(l.base, r.y) << "," << elem_name(l.base, r.z) << ")\n";
                return 1;
            } else
                throw std::runtime_error("unknown construct kind " + sub);
            return 0;
        }
        if (c_spec->parsed()) return run_spectral(sub, files, samples, dim, seed);
        if (c_ref->parsed()) {
            if (sub == "build") {
                Lattice l = as_lattice(load(file));
                RefMatrix m = build_refmat(l);
                std::cout << "indices " << m.num_indices << " propositions "
                          << m.carrier.size() << "\n";
                std::string err = check_matrix_axioms(m);
                if (!err.empty()) {
                    std::cout << "axiom failure: " << err << "\n";
                    return 1;
                }
                return 0;
            }
            if (sub == "represent") {
                Lattice l = as_lattice(load(file));
                auto r = representation_check(l);
                if (r.orthoiso) {
                    std::cout << "orthoisomorphic to its matrix image\n";
                    return 0;
                }
                std::cout << "representation fails at (" << elem_name(l.base, r.wx) << ","
                          << elem_name(l.base, r.wy) << ")"
                          << (r.injective ? "" : " [not injective]")
                          << (r.forward ? "" : " [precsim does not imply leq]")
                          << (r.converse ? "" : " [leq does not imply precsim]") << "\n";
                return 1;
            }
            if (sub == "entail") {
                RefMatrix m;
                if (file.empty() || file == "example")
                    m = example_matrix();
                else
                    m = build_refmat(as_lattice(load(file)));
                std::vector<Formula> gamma;
                for (const auto& g : files) gamma.push_back(parse_formula(g));
                if (cls.empty()) throw std::runtime_error("entail needs --phi");
                Formula phi = parse_formula(cls);
                bool structural = !out_path.empty();
                bool ok = structural ? entails_structural(m, gamma, phi) : entails(m, gamma, phi);
                std::cout << (ok ? "entails" : "does not entail") << "\n";
                return ok ? 0 : 1;
            }
            throw std::runtime_error("unknown refmat kind " + sub);
        }
        if (c_enum->parsed()) {
            EnumerateOptions opts;
            if (!cls.empty()) {
                std::string c = cls;
                opts.keep = [c](const Poset& p) { return static_cast<bool>(check_class(p, c)); };
            }
            auto models = enumerate_models(n, opts);
            std::cout << "count " << models.size() << "\n";
            return 0;
        }
        if (c_cat->parsed()) {
            if (sub == "list") {
                for (const auto& e : catalog())
                    std::cout << e.name << "\t" << e.poset.n << "\t" << e.note << "\n";
                return 0;
            }
            if (sub == "emit") {
                if (!catalog_has(name)) {
                    std::cerr << "unknown catalog name: " << name << "\n";
                    return 2;
                }
                std::cout << emit_ilat(catalog_get(name).poset);
                return 0;
            }
            throw std::runtime_error("unknown catalog kind " + sub);
        }
        if (c_dot->parsed()) {
            std::cout << to_dot(load(file));
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "invalid structure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
