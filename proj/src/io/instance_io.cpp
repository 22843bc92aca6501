#include "relcalc/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace relcalc::io {

using nlohmann::json;

const Relation<double>* Instance::find(const std::string& name) const
{
    const auto it = relations.find(name);
    return it == relations.end() ? nullptr : &it->second;
}

namespace {

json relation_json(const Relation<double>& r)
{
    const auto& b = r.graph().basis();
    json rows = json::array();
    for (Index j = 0; j < b.cols(); ++j) {
        json row = json::array();
        for (Index i = 0; i < b.rows(); ++i) {
            row.push_back(b(i, j).real());
            row.push_back(b(i, j).imag());
        }
        rows.push_back(std::move(row));
    }
    return json{{"basis", std::move(rows)}};
}

double number(const json& v, const char* what)
{
    if (!v.is_number())
        throw PreconditionError(std::string("instance: ") + what + " must be a number");
    return v.get<double>();
}

Relation<double> relation_from_json(const json& j, Index n, const TolerancePolicy& tol, const std::string& name)
{
    if (!j.is_object() || !j.contains("basis") || !j["basis"].is_array())
        throw PreconditionError("instance: relation '" + name + "' needs a basis array");
    const json& rows = j["basis"];
    MatrixX<double> cols(2 * n, static_cast<Index>(rows.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const json& row = rows[r];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(4 * n))
            throw PreconditionError("instance: relation '" + name + "' rows must hold 4n reals");
        for (Index i = 0; i < 2 * n; ++i)
            cols(i, static_cast<Index>(r)) = {number(row[2 * i], "basis entry"), number(row[2 * i + 1], "basis entry")};
    }
    if (!all_finite<double>(cols))
        throw PreconditionError("instance: relation '" + name + "' has non-finite entries");
    if (cols.cols() > 2 * n)
        throw PreconditionError("instance: relation '" + name + "' has more than 2n rows");
    return Relation<double>::from_graph_vectors(n, cols, tol);
}

} // namespace

std::string to_json_string(const Instance& inst)
{
    json j;
    j["space_dim"] = inst.space_dim;
    j["tol"] = {{"rank_rel_tol", inst.tol.rank_rel_tol}, {"angle_tol", inst.tol.angle_tol}};
    json rels = json::object();
    for (const auto& [name, r] : inst.relations)
        rels[name] = relation_json(r);
    j["relations"] = std::move(rels);
    if (inst.witness)
        j["witness"] = {{"a", inst.witness->a}, {"b", inst.witness->b}};
    if (!inst.kind.empty())
        j["kind"] = inst.kind;
    if (inst.seed)
        j["seed"] = *inst.seed;
    return j.dump(2) + "\n";
}

Instance parse_instance(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw PreconditionError(std::string("instance: invalid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw PreconditionError("instance: top level must be an object");
    Instance inst;
    if (!j.contains("space_dim") || !j["space_dim"].is_number_integer() || j["space_dim"].get<Index>() < 1)
        throw PreconditionError("instance: space_dim must be a positive integer");
    inst.space_dim = j["space_dim"].get<Index>();
    if (j.contains("tol")) {
        const json& t = j["tol"];
        if (!t.is_object())
            throw PreconditionError("instance: tol must be an object");
        if (t.contains("rank_rel_tol"))
            inst.tol.rank_rel_tol = number(t["rank_rel_tol"], "rank_rel_tol");
        if (t.contains("angle_tol"))
            inst.tol.angle_tol = number(t["angle_tol"], "angle_tol");
    }
    inst.tol.validate();
    if (!j.contains("relations") || !j["relations"].is_object())
        throw PreconditionError("instance: relations must be an object");
    for (const auto& [name, r] : j["relations"].items())
        inst.relations.emplace(name, relation_from_json(r, inst.space_dim, inst.tol, name));
    if (j.contains("witness")) {
        const json& w = j["witness"];
        if (!w.is_object() || !w.contains("a") || !w.contains("b"))
            throw PreconditionError("instance: witness needs a and b");
        inst.witness = Witness{number(w["a"], "witness a"), number(w["b"], "witness b")};
    }
    if (j.contains("kind") && j["kind"].is_string())
        inst.kind = j["kind"].get<std::string>();
    if (j.contains("seed") && j["seed"].is_number_unsigned())
        inst.seed = j["seed"].get<std::uint64_t>();
    return inst;
}

void save_instance(const Instance& inst, const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out)
        throw PreconditionError("cannot open " + path.string() + " for writing");
    out << to_json_string(inst);
    if (!out)
        throw PreconditionError("failed writing " + path.string());
}

Instance load_instance(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw PreconditionError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

} // namespace relcalc::io
