#include "embmon/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace embmon {

namespace {

using nlohmann::json;

[[noreturn]] void fieldError(const std::string &file, const std::string &field, const std::string &what)
{
    throw ParseError(file + ": field '" + field + "': " + what);
}

Int jsonToInt(const json &v, const std::string &file, const std::string &field)
{
    try {
        if (v.is_string()) return parseInt(v.get<std::string>());
        if (v.is_number_integer()) return Int(v.get<long>());
    } catch (const std::exception &e) {
        fieldError(file, field, e.what());
    }
    fieldError(file, field, "expected an integer");
}

VecInt jsonToIntVector(const json &v, const std::string &file, const std::string &field)
{
    if (!v.is_array()) fieldError(file, field, "expected an array");
    VecInt out;
    for (const json &x : v) out.push_back(jsonToInt(x, file, field));
    return out;
}

AbelianGroup jsonToGroup(const json &v, const std::string &file, const std::string &field)
{
    if (!v.is_object()) fieldError(file, field, "expected an object with 'rank' and 'torsion'");
    int rank = 0;
    if (v.contains("rank")) rank = static_cast<int>(jsonToInt(v["rank"], file, field + ".rank").get_si());
    VecInt torsion;
    if (v.contains("torsion")) torsion = jsonToIntVector(v["torsion"], file, field + ".torsion");
    try {
        return AbelianGroup(rank, torsion);
    } catch (const std::exception &e) {
        fieldError(file, field, e.what());
    }
}

} // namespace

Int parseInt(const std::string &text)
{
    std::string t;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw ParseError("empty integer literal");
    try {
        return Int(t);
    } catch (const std::invalid_argument &) {
        throw ParseError("bad integer literal '" + text + "'");
    }
}

Rat parseRat(const std::string &text)
{
    std::string t;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw ParseError("empty rational literal");
    try {
        Rat q(t);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument &) {
        throw ParseError("bad rational literal '" + text + "'");
    }
}

VecInt parseIntVector(const std::string &text)
{
    VecInt out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ','))
        out.push_back(parseInt(item));
    return out;
}

GroupElement parseElement(const std::string &text, const AbelianGroup &g)
{
    std::string freePart = text;
    std::string torsionPart;
    auto semi = text.find(';');
    if (semi != std::string::npos) {
        freePart = text.substr(0, semi);
        torsionPart = text.substr(semi + 1);
    }
    VecInt f = freePart.empty() ? VecInt{} : parseIntVector(freePart);
    VecInt t = torsionPart.empty() ? VecInt(g.torsionCount(), Int(0)) : parseIntVector(torsionPart);
    if (static_cast<int>(f.size()) != g.rank())
        throw ParseError("element '" + text + "' has " + std::to_string(f.size()) + " free coordinates, expected " +
                         std::to_string(g.rank()));
    if (static_cast<int>(t.size()) != g.torsionCount())
        throw ParseError("element '" + text + "' has " + std::to_string(t.size()) +
                         " torsion coordinates, expected " + std::to_string(g.torsionCount()));
    return g.element(std::move(f), std::move(t));
}

InputDocument loadInput(const std::string &path)
{
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        // Translate the byte offset into a line number.
        std::size_t line = 1;
        for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
            if (text[i] == '\n') ++line;
        throw ParseError(path + ": line " + std::to_string(line) + ": " + e.what());
    }

    if (!doc.is_object() || !doc.contains("kind")) fieldError(path, "kind", "missing");
    InputDocument out;
    out.kind = doc["kind"].get<std::string>();

    if (out.kind == "group") {
        out.group = jsonToGroup(doc, path, "(root)");
        return out;
    }

    if (out.kind == "monoid") {
        if (!doc.contains("group")) fieldError(path, "group", "missing");
        AbelianGroup g = jsonToGroup(doc["group"], path, "group");
        if (!doc.contains("generators") || !doc["generators"].is_array())
            fieldError(path, "generators", "expected an array of element strings");
        std::vector<GroupElement> gens;
        int idx = 0;
        for (const json &e : doc["generators"]) {
            std::string field = "generators[" + std::to_string(idx++) + "]";
            if (!e.is_string()) fieldError(path, field, "expected an element string like \"3;1\"");
            try {
                gens.push_back(parseElement(e.get<std::string>(), g));
            } catch (const std::exception &ex) {
                fieldError(path, field, ex.what());
            }
        }
        out.group = g;
        out.monoid = EmbeddedMonoid(g, std::move(gens));
        return out;
    }

    if (out.kind == "mds") {
        if (!doc.contains("numVars")) fieldError(path, "numVars", "missing");
        int numVars = static_cast<int>(jsonToInt(doc["numVars"], path, "numVars").get_si());

        if (!doc.contains("degreeMatrix") || !doc["degreeMatrix"].is_object())
            fieldError(path, "degreeMatrix", "expected an object with 'freeRows' and optional 'torsionRows'");
        const json &dm = doc["degreeMatrix"];

        std::vector<VecInt> freeRows;
        if (dm.contains("freeRows"))
            for (const json &row : dm["freeRows"]) freeRows.push_back(jsonToIntVector(row, path, "degreeMatrix.freeRows"));
        std::vector<std::pair<Int, VecInt>> torsionRows;
        if (dm.contains("torsionRows"))
            for (const json &row : dm["torsionRows"]) {
                if (!row.is_object() || !row.contains("mod") || !row.contains("row"))
                    fieldError(path, "degreeMatrix.torsionRows", "each entry needs 'mod' and 'row'");
                torsionRows.emplace_back(jsonToInt(row["mod"], path, "degreeMatrix.torsionRows.mod"),
                                         jsonToIntVector(row["row"], path, "degreeMatrix.torsionRows.row"));
            }

        for (const VecInt &r : freeRows)
            if (static_cast<int>(r.size()) != numVars) fieldError(path, "degreeMatrix.freeRows", "row length != numVars");
        for (const auto &r : torsionRows)
            if (static_cast<int>(r.second.size()) != numVars)
                fieldError(path, "degreeMatrix.torsionRows", "row length != numVars");

        VecInt torsionOrders;
        for (const auto &r : torsionRows) torsionOrders.push_back(r.first);
        AbelianGroup cl(static_cast<int>(freeRows.size()), torsionOrders);

        std::vector<GroupElement> degrees;
        for (int j = 0; j < numVars; ++j) {
            VecInt f, t;
            for (const VecInt &r : freeRows) f.push_back(r[j]);
            for (const auto &r : torsionRows) t.push_back(r.second[j]);
            degrees.push_back(cl.element(std::move(f), std::move(t)));
        }

        std::vector<Relation> relations;
        if (doc.contains("relations")) {
            int ri = 0;
            for (const json &rel : doc["relations"]) {
                std::string field = "relations[" + std::to_string(ri++) + "]";
                if (!rel.is_object() || !rel.contains("monomials")) fieldError(path, field, "expected 'monomials'");
                Relation r;
                for (const json &mono : rel["monomials"]) {
                    RelationMonomial m;
                    m.coeff = mono.contains("coeff") ? parseRat(mono["coeff"].is_string()
                                                                   ? mono["coeff"].get<std::string>()
                                                                   : mono["coeff"].dump())
                                                     : Rat(1);
                    m.exponents = jsonToIntVector(mono["exponents"], path, field + ".exponents");
                    r.monomials.push_back(std::move(m));
                }
                relations.push_back(std::move(r));
            }
        }

        std::optional<GroupElement> ample;
        if (doc.contains("ample")) {
            try {
                ample = parseElement(doc["ample"].get<std::string>(), cl);
            } catch (const std::exception &ex) {
                fieldError(path, "ample", ex.what());
            }
        }

        std::optional<std::vector<FaceIndexSet>> userFaces;
        if (doc.contains("fFaces")) {
            std::vector<FaceIndexSet> faces;
            for (const json &f : doc["fFaces"]) {
                FaceIndexSet s;
                for (const json &i : f) s.push_back(static_cast<int>(jsonToInt(i, path, "fFaces").get_si()));
                faces.push_back(std::move(s));
            }
            userFaces = std::move(faces);
        }

        try {
            out.mds = std::make_shared<MoriDreamSpace>(cl, degrees, relations, ample, userFaces);
        } catch (const std::exception &ex) {
            throw ParseError(path + ": " + ex.what());
        }

        if (doc.contains("canonicalClass")) {
            try {
                out.canonicalClass = parseElement(doc["canonicalClass"].get<std::string>(), cl);
            } catch (const std::exception &ex) {
                fieldError(path, "canonicalClass", ex.what());
            }
        }
        out.group = cl;
        return out;
    }

    fieldError(path, "kind", "unknown kind '" + out.kind + "'");
}

} // namespace embmon
