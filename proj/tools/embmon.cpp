// Command-line front end: membership, intersection and conductor queries for
// embedded monoids, plus base point free computations for Mori dream spaces.

#include <chrono>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "embmon/fujita.hpp"
#include "embmon/io.hpp"

using namespace embmon;
using nlohmann::json;

namespace {

struct Options {
    std::string format = "text";
    bool witness = false;
    int threads = 1;
    std::string capMode = "lcm";

    InMonoidOptions inMonoidOptions() const
    {
        InMonoidOptions o;
        o.capMode = capMode == "product" ? CapMode::Product : CapMode::Lcm;
        return o;
    }
};

json vecJson(const VecInt &v)
{
    json a = json::array();
    for (const Int &x : v) a.push_back(x.get_str());
    return a;
}

json elementsJson(const std::vector<GroupElement> &es)
{
    json a = json::array();
    for (const GroupElement &e : es) a.push_back(e.str());
    return a;
}

json facesJson(const std::vector<FaceIndexSet> &faces)
{
    json a = json::array();
    for (const FaceIndexSet &f : faces) {
        json b = json::array();
        for (int i : f) b.push_back(i);
        a.push_back(b);
    }
    return a;
}

std::string facesText(const std::vector<FaceIndexSet> &faces)
{
    std::string s;
    for (const FaceIndexSet &f : faces) {
        s += "{";
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(f[i]);
        }
        s += "} ";
    }
    if (!s.empty()) s.pop_back();
    return s;
}

void emit(const Options &opt, const json &doc, const std::string &text)
{
    if (opt.format == "json")
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
}

const EmbeddedMonoid &monoidOf(const InputDocument &doc, const std::string &path)
{
    if (!doc.monoid) throw InvalidInput(path + ": expected a monoid document");
    return *doc.monoid;
}

const MoriDreamSpace &mdsOf(const InputDocument &doc, const std::string &path)
{
    if (!doc.mds) throw InvalidInput(path + ": expected an mds document");
    return *doc.mds;
}

GroupElement resolveKx(const InputDocument &doc, const MoriDreamSpace &X, const std::string &kxArg)
{
    if (!kxArg.empty()) return parseElement(kxArg, X.classGroup());
    if (doc.canonicalClass) return *doc.canonicalClass;
    return X.canonicalClass();
}

json warningsJson(const MoriDreamSpace &X)
{
    json w = json::array();
    if (X.fFaceRuleIsHeuristic())
        w.push_back("multiple relations: the F-face rule is only a necessary condition; "
                    "pass an explicit fFaces list to override");
    return w;
}

void printWarnings(const MoriDreamSpace &X)
{
    if (X.fFaceRuleIsHeuristic())
        std::cerr << "warning: multiple relations present, the F-face rule is only a necessary "
                     "condition; pass an explicit fFaces list to override\n";
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"exact computations with embedded monoids and Mori dream spaces"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--witness", opt.witness, "include witness data in the output");
    app.add_option("--threads", opt.threads, "worker threads for independent subtests")
        ->check(CLI::Range(1, 256));
    app.add_option("--cap-mode", opt.capMode, "coefficient cap for torsion-only generators")
        ->check(CLI::IsMember({"lcm", "product"}));

    std::string file, file2, element, kxArg;
    bool interiorPoint = false;
    bool raw = false;

    auto addFileCmd = [&](const std::string &name, const std::string &desc, bool withElement) {
        CLI::App *c = app.add_subcommand(name, desc);
        c->fallthrough();
        c->add_option("file", file, "input document")->required();
        if (withElement) c->add_option("--element", element, "group element, e.g. \"3;1\"")->required();
        return c;
    };

    CLI::App *cInMonoid = addFileCmd("in-monoid", "test monoid membership", true);
    CLI::App *cIntersect = app.add_subcommand("intersect", "generators of the intersection of two monoids");
    cIntersect->fallthrough();
    cIntersect->add_option("file", file, "first monoid")->required();
    cIntersect->add_option("file2", file2, "second monoid")->required();
    cIntersect->add_flag("--raw", raw, "also print the unreduced generator list");
    CLI::App *cModuleGens = addFileCmd("module-gens", "module generators of the saturation", false);
    CLI::App *cInSat = addFileCmd("in-saturation", "test saturation membership", true);
    CLI::App *cInCond = addFileCmd("in-conductor", "test conductor-ideal membership", true);
    CLI::App *cCondPoint = addFileCmd("conductor-point", "compute a conductor-ideal element", false);
    CLI::App *cSpanning = addFileCmd("is-spanning", "test whether the monoid spans its group", false);
    CLI::App *cFFaces = addFileCmd("ffaces", "F-faces of a Mori dream space", false);
    CLI::App *cRlv = addFileCmd("rlv", "relevant faces", false);
    CLI::App *cCov = addFileCmd("cov", "covering collection", false);
    CLI::App *cPic = addFileCmd("pic", "Picard group inside the class group", false);
    CLI::App *cBpfGens = addFileCmd("bpf-gens", "generators of the base point free monoid", false);
    CLI::App *cIsBpf = addFileCmd("is-bpf", "test base point freeness of a class", true);
    CLI::App *cBaseLocus = addFileCmd("base-locus", "strata index sets covering the base locus", true);
    CLI::App *cSemiample = addFileCmd("semiample-contains", "test membership in the semiample cone", true);
    CLI::App *cCanonical = addFileCmd("canonical-class", "canonical class (complete intersection formula)", false);
    CLI::App *cGorenstein = addFileCmd("gorenstein", "test whether the canonical class is Cartier", false);
    cGorenstein->add_option("--kx", kxArg, "canonical class override");
    CLI::App *cMoving = addFileCmd("moving-cone", "moving cone of the Cox generators", false);
    cMoving->add_flag("--interior-point", interiorPoint, "also print a relative interior point");
    CLI::App *cQFact = addFileCmd("qfactorial-check", "full-dimensionality of the ample chamber", false);
    CLI::App *cDim = addFileCmd("dimension", "dimension of the Mori dream space", false);
    CLI::App *cFujita = addFileCmd("fujita", "base point free conjecture test", false);
    cFujita->add_option("--kx", kxArg, "canonical class override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e);
    }

    auto started = std::chrono::steady_clock::now();
    int rc = 0;
    try {
        json out;
        out["command"] = app.get_subcommands().front()->get_name();
        out["inputs"] = json::array({file});
        std::string text;

        if (cInMonoid->parsed()) {
            InputDocument doc = loadInput(file);
            const EmbeddedMonoid &S = monoidOf(doc, file);
            GroupElement w = parseElement(element, S.group());
            auto coeffs = monoidCoefficients(S, w, opt.inMonoidOptions());
            out["element"] = element;
            out["result"]["member"] = coeffs.has_value();
            text = coeffs ? "true" : "false";
            if (opt.witness && coeffs) {
                out["witness"] = vecJson(*coeffs);
                text += "  witness " + vecToString(*coeffs);
            }
            text += "\n";
        } else if (cIntersect->parsed()) {
            InputDocument d1 = loadInput(file);
            InputDocument d2 = loadInput(file2);
            out["inputs"].push_back(file2);
            IntersectionResult r =
                generatorsIntMonoid(monoidOf(d1, file), monoidOf(d2, file2), opt.inMonoidOptions());
            out["result"]["generators"] = elementsJson(r.monoid.generators());
            out["result"]["rawGenerators"] = elementsJson(r.rawGenerators);
            text = "generators:";
            for (const GroupElement &g : r.monoid.generators()) text += " " + g.str();
            text += "\n";
            if (raw || opt.witness) {
                text += "raw:";
                for (const GroupElement &g : r.rawGenerators) text += " " + g.str();
                text += "\n";
            }
        } else if (cModuleGens->parsed()) {
            InputDocument doc = loadInput(file);
            std::vector<GroupElement> M = moduleGenerators(monoidOf(doc, file));
            out["result"]["moduleGenerators"] = elementsJson(M);
            text = "module generators:";
            for (const GroupElement &g : M) text += " " + g.str();
            text += "\n";
        } else if (cInSat->parsed()) {
            InputDocument doc = loadInput(file);
            const EmbeddedMonoid &S = monoidOf(doc, file);
            bool r = inSaturation(S, parseElement(element, S.group()));
            out["element"] = element;
            out["result"]["member"] = r;
            text = std::string(r ? "true" : "false") + "\n";
        } else if (cInCond->parsed()) {
            InputDocument doc = loadInput(file);
            const EmbeddedMonoid &S = monoidOf(doc, file);
            bool r = inConductorIdeal(S, parseElement(element, S.group()), opt.inMonoidOptions(), opt.threads);
            out["element"] = element;
            out["result"]["member"] = r;
            text = std::string(r ? "true" : "false") + "\n";
        } else if (cCondPoint->parsed()) {
            InputDocument doc = loadInput(file);
            GroupElement c = conductorPoint(monoidOf(doc, file), opt.inMonoidOptions());
            out["result"]["conductorPoint"] = c.str();
            text = c.str() + "\n";
        } else if (cSpanning->parsed()) {
            InputDocument doc = loadInput(file);
            bool r = isSpanning(monoidOf(doc, file));
            out["result"]["spanning"] = r;
            text = std::string(r ? "true" : "false") + "\n";
        } else if (cFFaces->parsed()) {
            InputDocument doc = loadInput(file);
            const MoriDreamSpace &X = mdsOf(doc, file);
            printWarnings(X);
            out["warnings"] = warningsJson(X);
            out["result"]["fFaces"] = facesJson(X.fFaces());
            out["result"]["count"] = X.fFaces().size();
            text = std::to_string(X.fFaces().size()) + " F-faces\n" + facesText(X.fFaces()) + "\n";
        } else if (cRlv->parsed()) {
            InputDocument doc = loadInput(file);
            const MoriDreamSpace &X = mdsOf(doc, file);
            printWarnings(X);
            out["warnings"] = warningsJson(X);
            out["result"]["relevantFaces"] = facesJson(X.relevantFaces());
            out["result"]["count"] = X.relevantFaces().size();
            text = std::to_string(X.relevantFaces().size()) + " relevant faces\n" +
                   facesText(X.relevantFaces()) + "\n";
        } else if (cCov->parsed()) {
            InputDocument doc = loadInput(file);
            const MoriDreamSpace &X = mdsOf(doc, file);
            printWarnings(X);
            out["warnings"] = warningsJson(X);
            out["result"]["coveringCollection"] = facesJson(X.coveringCollection());
            text = facesText(X.coveringCollection()) + "\n";
        } else if (cPic->parsed()) {
            InputDocument doc = loadInput(file);
            const MoriDreamSpace &X = mdsOf(doc, file);
            printWarnings(X);
            const PicardData &pic = X.picard();
            out["warnings"] = warningsJson(X);
            out["result"]["rank"] = pic.coords.group().rank();
            out["result"]["torsion"] = vecJson(pic.coords.group().torsionOrders());
            out["result"]["basisInClassGroup"] = elementsJson(pic.coords.basis());
            text = "Pic = " + pic.coords.group().str() + "\nbasis in Cl:";
            for (const GroupElement &b : pic.coords.basis()) text += " " + b.str();
            text += "\n";
        } else if (cBpfGens->parsed()) {
            InputDocument doc = loadInput(file);
            const MoriDreamSpace &X = mdsOf(doc, file);
            printWarnings(X);
            out["warnings"] = warningsJson(X);
            out["result"]["generators"] = elementsJson(X.bpfMonoid().generators());
            out["result"]["generatorsInClassGroup"] = elementsJson(X.bpfGeneratorsAmbient());
            text = "BPF generators (Pic coordinates):";
            for (const GroupElement &g : X.bpfMonoid().generators()) text += " [" + g.str() + "]";
            text += "\n";
        } else if (cIsBpf->parsed()) {
            InputDocument doc = loadInput(file);
            const MoriDreamSpace &X = mdsOf(doc, file);
            printWarnings(X);
            GroupElement w = parseElement(element, X.classGroup());
            bool r = X.isBasePointFree(w);
            out["warnings"] = warningsJson(X);
            out["element"] = element;
            out["result"]["basePointFree"] = r;
            text = std::string(r ? "true" : "false") + "\n";
        } else if (cBaseLocus->parsed()) {
            InputDocument doc = loadInput(file);
            const MoriDreamSpace &X = mdsOf(doc, file);
            printWarnings(X);
            GroupElement w = parseElement(element, X.classGroup());
            std::vector<FaceIndexSet> faces = X.baseLocusFaces(w);
            out["warnings"] = warningsJson(X);
            out["element"] = element;
            out["result"]["strata"] = facesJson(faces);
            text = faces.empty() ? "base locus empty\n" : ("strata: " + facesText(faces) + "\n");
        } else if (cSemiample->parsed()) {
            InputDocument doc = loadInput(file);
            const MoriDreamSpace &X = mdsOf(doc, file);
            printWarnings(X);
            GroupElement w = parseElement(element, X.classGroup());
            bool r = X.semiampleContains(w);
            out["warnings"] = warningsJson(X);
            out["element"] = element;
            out["result"]["semiample"] = r;
            text = std::string(r ? "true" : "false") + "\n";
        } else if (cCanonical->parsed()) {
            InputDocument doc = loadInput(file);
            GroupElement kx = mdsOf(doc, file).canonicalClass();
            out["result"]["canonicalClass"] = kx.str();
            text = kx.str() + "\n";
        } else if (cGorenstein->parsed()) {
            InputDocument doc = loadInput(file);
            const MoriDreamSpace &X = mdsOf(doc, file);
            GroupElement kx = resolveKx(doc, X, kxArg);
            bool r = X.isGorenstein(kx);
            out["kx"] = kx.str();
            out["result"]["gorenstein"] = r;
            text = std::string(r ? "true" : "false") + "\n";
        } else if (cMoving->parsed()) {
            InputDocument doc = loadInput(file);
            RationalCone mov = mdsOf(doc, file).movingCone();
            out["result"]["rays"] = json::array();
            for (const VecInt &r : mov.rays()) out["result"]["rays"].push_back(vecJson(r));
            out["result"]["linealityBasis"] = json::array();
            for (const VecInt &l : mov.linealityBasis()) out["result"]["linealityBasis"].push_back(vecJson(l));
            text = "rays:";
            for (const VecInt &r : mov.rays()) text += " " + vecToString(r);
            text += "\n";
            if (interiorPoint) {
                auto p = relativeInteriorPoint(mov);
                if (p) {
                    out["result"]["interiorPoint"] = vecJson(*p);
                    text += "interior point: " + vecToString(*p) + "\n";
                }
            }
        } else if (cQFact->parsed()) {
            InputDocument doc = loadInput(file);
            bool r = mdsOf(doc, file).qFactorialityCheck();
            out["result"]["qFactorial"] = r;
            text = std::string(r ? "true" : "false") + "\n";
        } else if (cDim->parsed()) {
            InputDocument doc = loadInput(file);
            Int d = mdsOf(doc, file).dimension();
            out["result"]["dimension"] = d.get_str();
            text = d.get_str() + "\n";
        } else if (cFujita->parsed()) {
            InputDocument doc = loadInput(file);
            const MoriDreamSpace &X = mdsOf(doc, file);
            printWarnings(X);
            GroupElement kx = resolveKx(doc, X, kxArg);
            FujitaReport report = fujitaBpf(X, kx, opt.inMonoidOptions(), opt.threads);

            out["warnings"] = warningsJson(X);
            out["kx"] = kx.str();
            out["result"]["verdict"] = report.verdict;
            if (!report.reason.empty()) out["result"]["reason"] = report.reason;
            text = std::string(report.verdict ? "true" : "false");
            if (!report.reason.empty()) text += " (" + report.reason + ")";
            text += "\n";
            if (report.setting) {
                const FujitaSetting &st = *report.setting;
                out["result"]["conductor"] = st.conductor.str();
                out["result"]["alphas"] = vecJson(st.alphas());
                out["result"]["nu"] = st.nu.get_str();
                out["result"]["dimension"] = st.dimension.get_str();
                out["result"]["bpfGenerators"] = elementsJson(st.monoid.generators());
                json trace = json::array();
                for (const FujitaCell &c : report.loopTrace)
                    trace.push_back(json{{"facet", c.facetIndex},
                                         {"m", c.m.get_str()},
                                         {"k", c.k.get_str()},
                                         {"candidates", c.candidateCount}});
                out["result"]["loopTrace"] = trace;
                text += "conductor C = " + st.conductor.str() + "\n";
                text += "alphas = " + vecToString(st.alphas()) + ", nu = " + st.nu.get_str() + "\n";
                text += "loop cells: " + std::to_string(report.loopTrace.size()) + "\n";
            }
            if (report.witness) {
                const FujitaWitness &w = *report.witness;
                out["result"]["witness"] = json{{"facet", w.facetIndex},
                                                {"m", w.m.get_str()},
                                                {"k", w.k.get_str()},
                                                {"ampleClass", w.ampleClass.str()},
                                                {"tested", w.tested.str()},
                                                {"freePartInCone", w.freePartInCone}};
                text += "witness: facet " + std::to_string(w.facetIndex) + ", m = " + w.m.get_str() +
                        ", k = " + w.k.get_str() + ", L = [" + w.ampleClass.str() + "], K_X + mL = [" +
                        w.tested.str() + "]\n";
            }
        }

        emit(opt, out, text);
    } catch (const ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = 1;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = 1;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        rc = 2;
    }

    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
    std::cerr << "elapsed: " << elapsed.count() << " ms\n";
    return rc;
}
