#include "workspace.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "litalg/sampling.hpp"

namespace litcalc {

using namespace litalg;

namespace {

const std::vector<std::string> kSections{"algebras",     "bimodules", "certificates",
                                         "contexts",     "modules",   "triples"};

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw InvalidInput(where + ": " + what);
}

std::string str_field(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key) || !j[key].is_string())
        fail(where, std::string("expected a string \"") + key + "\"");
    return j[key].get<std::string>();
}

std::size_t uint_field(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key) || !j[key].is_number_unsigned())
        fail(where, std::string("expected a non-negative integer \"") + key + "\"");
    return j[key].get<std::size_t>();
}

std::size_t count_keys(const json& j, std::initializer_list<const char*> keys) {
    std::size_t c = 0;
    for (auto k : keys)
        c += j.contains(k);
    return c;
}

// Generator matrices from a {label: matrix} object; arrows default to zero
// and the unique idempotent of a local algebra to the identity.
std::vector<Matrix> generator_matrices(const AlgebraPtr& a, const json& actions, std::size_t dim,
                                       const std::string& where) {
    if (!actions.is_object())
        fail(where, "actions must be an object keyed by generator label");
    for (auto it = actions.begin(); it != actions.end(); ++it) {
        try {
            a->generator_index(it.key());
        } catch (const InvalidInput&) {
            fail(where, "unknown generator " + it.key());
        }
    }
    const Field f = a->field();
    std::vector<Matrix> gens;
    for (std::size_t g = 0; g < a->generator_count(); ++g) {
        auto label = a->generator_label(g);
        if (actions.contains(label))
            gens.push_back(matrix_from_json(f, actions[label], dim, dim, where + "." + label));
        else if (g >= a->idempotent_count())
            gens.push_back(Matrix(f, dim, dim));
        else if (a->idempotent_count() == 1)
            gens.push_back(Matrix::identity(f, dim));
        else
            fail(where, "missing action of " + label);
    }
    return gens;
}

std::size_t vertex_index(const AlgebraPtr& a, const json& j, const std::string& where) {
    if (!j.is_number_unsigned())
        fail(where, "vertex must be a positive integer");
    auto v = j.get<std::size_t>();
    if (v == 0 || v > a->idempotent_count())
        fail(where, "vertex " + std::to_string(v) + " out of range");
    return v - 1;
}

}  // namespace

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(m(r, c));
        rows.push_back(row);
    }
    return rows;
}

Matrix matrix_from_json(const Field& f, const json& j, std::size_t rows, std::size_t cols,
                        const std::string& what) {
    if (!j.is_array())
        fail(what, "matrix must be an array of rows");
    if (j.size() != rows)
        fail(what, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            fail(what, "row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) {
            if (!j[r][c].is_number_integer())
                fail(what, "entries must be integers");
            m(r, c) = f.reduce(j[r][c].get<std::int64_t>());
        }
    }
    return m;
}

json module_to_json(const std::string& algebra_name, const Module& m) {
    json actions = json::object();
    const auto& a = *m.algebra();
    for (std::size_t g = 0; g < a.generator_count(); ++g)
        actions[a.generator_label(g)] = matrix_to_json(m.generator_action(g));
    return json{{"algebra", algebra_name}, {"dim", m.dim()}, {"actions", actions}};
}

QuiverAnSpec an_spec_from_json(const json& j) {
    QuiverAnSpec s;
    s.n = uint_field(j, "n", "A_n quiver");
    if (j.contains("changes"))
        s.change_vertices = j["changes"].get<std::vector<std::size_t>>();
    if (j.contains("initial")) {
        auto d = j["initial"].get<std::string>();
        if (d == "rightward")
            s.initial = Direction::rightward;
        else if (d == "leftward")
            s.initial = Direction::leftward;
        else
            fail("A_n quiver", "initial must be \"rightward\" or \"leftward\"");
    }
    s.validate();
    return s;
}

Workspace Workspace::load(const std::vector<std::string>& paths, std::optional<std::uint32_t> field) {
    std::vector<json> docs;
    for (const auto& p : paths) {
        std::ifstream in(p);
        if (!in)
            throw InvalidInput("cannot open " + p);
        try {
            docs.push_back(json::parse(in));
        } catch (const json::parse_error& e) {
            throw InvalidInput(p + ": " + e.what());
        }
    }
    return from_json(docs, field);
}

Workspace Workspace::from_json(const std::vector<json>& docs, std::optional<std::uint32_t> field) {
    Workspace ws;
    std::optional<std::uint32_t> chosen;
    for (const auto& d : docs) {
        if (!d.is_object())
            throw InvalidInput("workspace file must be a JSON object");
        for (auto it = d.begin(); it != d.end(); ++it)
            if (it.key() != "field" &&
                std::find(kSections.begin(), kSections.end(), it.key()) == kSections.end())
                throw InvalidInput("unknown workspace section " + it.key());
        std::optional<std::uint32_t> p;
        if (d.contains("field")) {
            if (!d["field"].is_number_unsigned())
                throw InvalidInput("field must be a prime");
            p = d["field"].get<std::uint32_t>();
        }
        if (p && chosen && *p != *chosen)
            throw InvalidInput("mixed field characteristics " + std::to_string(*chosen) + " and " +
                               std::to_string(*p));
        if (p)
            chosen = p;
        for (const auto& sec : kSections) {
            if (!d.contains(sec))
                continue;
            if (!d[sec].is_object())
                throw InvalidInput(sec + " must be an object keyed by name");
            for (auto it = d[sec].begin(); it != d[sec].end(); ++it) {
                if (!ws.raw_[sec].emplace(it.key(), it.value()).second)
                    throw InvalidInput(sec + "." + it.key() + " is defined twice");
            }
        }
    }
    if (chosen && field && *chosen != *field)
        throw InvalidInput("--field " + std::to_string(*field) + " does not match the files' field " +
                           std::to_string(*chosen));
    std::uint32_t p = chosen ? *chosen : field ? *field : 2;
    if (!is_prime(p))
        throw InvalidInput("field characteristic " + std::to_string(p) + " is not prime");
    ws.field_ = Field(p);
    ws.build_all();
    return ws;
}

void Workspace::build_all() {
    for (const auto& [name, _] : raw_["algebras"])
        algebra(name);
    for (const auto& [name, _] : raw_["modules"])
        module(name);
    for (const auto& [name, _] : raw_["bimodules"])
        bimodule(name);
    for (const auto& [name, _] : raw_["contexts"])
        context(name);
    for (const auto& [name, _] : raw_["certificates"])
        certificate(name);
    for (const auto& [name, _] : raw_["triples"])
        triple(name);
}

const json& Workspace::entry(const std::string& section, const std::string& name) const {
    auto s = raw_.find(section);
    if (s == raw_.end() || !s->second.count(name))
        throw InvalidInput("unresolved reference " + section + "." + name);
    return s->second.at(name);
}

std::vector<std::string> Workspace::names(const std::string& section) const {
    std::vector<std::string> out;
    auto s = raw_.find(section);
    if (s != raw_.end())
        for (const auto& [k, _] : s->second)
            out.push_back(k);
    return out;
}

std::string Workspace::single(const std::string& section) const {
    auto n = names(section);
    if (n.size() != 1)
        throw InvalidInput("the workspace has " + std::to_string(n.size()) + " " + section +
                           "; name one explicitly");
    return n[0];
}

AlgebraPtr Workspace::algebra(const std::string& name) {
    if (auto it = algebras_.find(name); it != algebras_.end())
        return it->second;
    const json& j = entry("algebras", name);
    const std::string where = "algebras." + name;
    if (!building_.insert(where).second)
        fail(where, "circular reference");
    if (count_keys(j, {"quiver", "an", "opposite", "triangular", "tensor_an"}) != 1)
        fail(where, "expected exactly one of quiver, an, opposite, triangular, tensor_an");
    AlgebraPtr a;
    if (j.contains("quiver")) {
        const auto& q = j["quiver"];
        Quiver quiver;
        quiver.vertex_count = uint_field(q, "vertices", where);
        if (q.contains("arrows"))
            for (const auto& arr : q["arrows"])
                quiver.arrows.push_back({str_field(arr, "label", where), uint_field(arr, "source", where),
                                         uint_field(arr, "target", where)});
        std::vector<std::string> rels;
        if (j.contains("relations"))
            rels = j["relations"].get<std::vector<std::string>>();
        a = build_bound_quiver_algebra(quiver, rels, field_, name);
    } else if (j.contains("an")) {
        auto spec = an_spec_from_json(j["an"]);
        a = build_bound_quiver_algebra(build_quiver_An(spec), std::vector<Relation>{}, field_, name);
    } else if (j.contains("opposite")) {
        a = opposite(algebra(j["opposite"].get<std::string>()));
    } else if (j.contains("triangular")) {
        a = context(j["triangular"].get<std::string>()).lambda;
    } else {
        const auto& t = j["tensor_an"];
        a = tensor_with_path_algebra(algebra(str_field(t, "base", where)),
                                     build_quiver_An(an_spec_from_json(t)));
    }
    building_.erase(where);
    algebras_[name] = a;
    return a;
}

Module Workspace::module(const std::string& name) {
    if (auto it = modules_.find(name); it != modules_.end())
        return it->second;
    const json& j = entry("modules", name);
    const std::string where = "modules." + name;
    if (!building_.insert(where).second)
        fail(where, "circular reference");
    auto a = algebra(str_field(j, "algebra", where));
    if (count_keys(j, {"actions", "simple", "projective", "regular", "sum"}) != 1)
        fail(where, "expected exactly one of actions, simple, projective, regular, sum");
    Module m;
    if (j.contains("actions")) {
        auto dim = uint_field(j, "dim", where);
        try {
            m = Module::from_generator_actions(a, dim, generator_matrices(a, j["actions"], dim, where));
        } catch (const InvalidInput& e) {
            fail(where, e.what());
        }
    } else if (j.contains("simple")) {
        m = simple_module(a, vertex_index(a, j["simple"], where));
    } else if (j.contains("projective")) {
        m = projective_indecomposable(a, vertex_index(a, j["projective"], where));
    } else if (j.contains("regular")) {
        m = regular_module(a);
    } else {
        std::vector<Module> parts;
        for (const auto& p : j["sum"]) {
            auto x = module(p.get<std::string>());
            if (x.algebra().get() != a.get())
                fail(where, "summand " + p.get<std::string>() + " is over another algebra");
            parts.push_back(x);
        }
        m = direct_sum(a, parts);
    }
    building_.erase(where);
    modules_[name] = m;
    return m;
}

Bimodule Workspace::bimodule(const std::string& name) {
    if (auto it = bimodules_.find(name); it != bimodules_.end())
        return it->second;
    const json& j = entry("bimodules", name);
    const std::string where = "bimodules." + name;
    auto left = algebra(str_field(j, "left", where));
    auto right = algebra(str_field(j, "right", where));
    if (count_keys(j, {"regular", "projective", "left_actions"}) != 1)
        fail(where, "expected exactly one of regular, projective, left_actions");
    Bimodule b;
    try {
        if (j.contains("regular")) {
            if (left.get() != right.get())
                fail(where, "the regular bimodule needs left = right");
            b = Bimodule::regular(left);
        } else if (j.contains("projective")) {
            std::vector<std::pair<std::size_t, std::size_t>> pairs;
            for (const auto& p : j["projective"]) {
                if (!p.is_array() || p.size() != 2)
                    fail(where, "projective pairs are [left vertex, right vertex]");
                pairs.emplace_back(vertex_index(left, p[0], where), vertex_index(right, p[1], where));
            }
            b = Bimodule::projective(left, right, pairs);
        } else {
            auto dim = uint_field(j, "dim", where);
            if (!j.contains("right_actions"))
                fail(where, "left_actions needs right_actions");
            b = Bimodule::from_generator_actions(
                left, right, dim, generator_matrices(left, j["left_actions"], dim, where + ".left"),
                generator_matrices(right, j["right_actions"], dim, where + ".right"));
        }
    } catch (const InvalidInput& e) {
        std::string msg = e.what();
        if (msg.rfind(where, 0) == 0)
            throw;
        fail(where, msg);
    }
    bimodules_[name] = b;
    return b;
}

TriangularContext Workspace::context(const std::string& name) {
    if (auto it = contexts_.find(name); it != contexts_.end())
        return it->second;
    const json& j = entry("contexts", name);
    const std::string where = "contexts." + name;
    if (!building_.insert(where).second)
        fail(where, "circular reference");
    auto t = algebra(str_field(j, "t", where));
    auto u = algebra(str_field(j, "u", where));
    auto m = bimodule(str_field(j, "m", where));
    if (m.left_algebra().get() != u.get() || m.right_algebra().get() != t.get())
        fail(where, "m must be a u-t-bimodule");
    auto ctx = TriangularContext::create(t, u, m);
    building_.erase(where);
    contexts_[name] = ctx;
    return ctx;
}

LITCertificate Workspace::certificate(const std::string& name) {
    if (auto it = certificates_.find(name); it != certificates_.end())
        return it->second;
    const json& j = entry("certificates", name);
    const std::string where = "certificates." + name;
    auto a = algebra(str_field(j, "algebra", where));
    auto n = uint_field(j, "n", where);
    auto over_a = [&](const std::string& ref) {
        auto m = module(ref);
        if (m.algebra().get() != a.get())
            fail(where, ref + " is over another algebra");
        return m;
    };
    Module v;
    if (j.contains("V") && !(j["V"].is_number_integer() && j["V"].get<std::int64_t>() == 0)) {
        if (!j["V"].is_string())
            fail(where, "V is a module name or 0");
        v = over_a(j["V"].get<std::string>());
    }
    LITCertificate c;
    if (!j.contains("D"))
        fail(where, "missing D");
    if (j["D"].is_string()) {
        if (j["D"].get<std::string>() != "all_modules")
            fail(where, "D is a list of module names or \"all_modules\"");
        c = LITCertificate::make_all_modules(a, n, v);
    } else {
        std::vector<Module> gens;
        for (const auto& g : j["D"])
            gens.push_back(over_a(g.get<std::string>()));
        c = LITCertificate::make(a, n, gens, v);
    }
    certificates_[name] = c;
    return c;
}

TripleModule Workspace::triple(const std::string& name) {
    if (auto it = triples_.find(name); it != triples_.end())
        return it->second;
    const json& j = entry("triples", name);
    const std::string where = "triples." + name;
    auto ctx = context(str_field(j, "context", where));
    auto side = [&](const char* key, const AlgebraPtr& alg) {
        if (!j.contains(key) || j[key].is_null())
            return Module();
        auto m = module(j[key].get<std::string>());
        if (m.algebra().get() != alg.get())
            fail(where, std::string(key) + " is over the wrong algebra");
        return m;
    };
    Module a = side("a", ctx.t), b = side("b", ctx.u);
    std::size_t ta = a.valid() ? tensor_over_T(ctx.m, a).module.dim() : 0;
    Matrix f = j.contains("f") ? matrix_from_json(field_, j["f"], b.dim(), ta, where + ".f")
                               : Matrix(field_, b.dim(), ta);
    TripleModule tm;
    try {
        tm = make_triple(ctx, a, b, f);
    } catch (const InvalidInput& e) {
        fail(where, e.what());
    }
    triples_[name] = tm;
    return tm;
}

std::string Workspace::name_of(const AlgebraPtr& a) const {
    for (const auto& [k, v] : algebras_)
        if (v.get() == a.get())
            return k;
    throw InvalidInput("algebra is not part of the workspace");
}

std::string Workspace::triple_context(const std::string& triple) const {
    return entry("triples", triple).at("context").get<std::string>();
}

std::string Workspace::emit() const {
    json out = json::object();
    out["field"] = field_.characteristic();
    for (const auto& [sec, entries] : raw_) {
        if (entries.empty())
            continue;
        json s = json::object();
        for (const auto& [k, v] : entries)
            s[k] = v;
        out[sec] = s;
    }
    return out.dump(2) + "\n";
}

}  // namespace litcalc
