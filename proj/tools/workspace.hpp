#pragma once

// JSON workspaces: named algebras, modules, bimodules, triangular contexts,
// certificates and triples over one prime field.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "litalg/litcore.hpp"

namespace litcalc {

using json = nlohmann::json;

class Workspace {
  public:
    /// Merges the files in order; a file without "field" inherits
    /// default_field. Every object is built and validated before returning.
    static Workspace load(const std::vector<std::string>& paths, std::optional<std::uint32_t> field);
    static Workspace from_json(const std::vector<json>& docs, std::optional<std::uint32_t> field);

    const litalg::Field& field() const { return field_; }

    litalg::AlgebraPtr algebra(const std::string& name);
    litalg::Module module(const std::string& name);
    litalg::Bimodule bimodule(const std::string& name);
    litalg::TriangularContext context(const std::string& name);
    litalg::LITCertificate certificate(const std::string& name);
    litalg::TripleModule triple(const std::string& name);

    std::vector<std::string> names(const std::string& section) const;
    /// The only name in a section, for commands that omit it.
    std::string single(const std::string& section) const;

    /// Name under which an algebra was loaded.
    std::string name_of(const litalg::AlgebraPtr& a) const;
    std::string triple_context(const std::string& triple) const;

    /// Canonical form: sorted keys, two-space indent, trailing newline.
    std::string emit() const;

  private:
    litalg::Field field_{2};
    std::map<std::string, std::map<std::string, json>> raw_;
    std::map<std::string, litalg::AlgebraPtr> algebras_;
    std::map<std::string, litalg::Module> modules_;
    std::map<std::string, litalg::Bimodule> bimodules_;
    std::map<std::string, litalg::TriangularContext> contexts_;
    std::map<std::string, litalg::LITCertificate> certificates_;
    std::map<std::string, litalg::TripleModule> triples_;
    std::set<std::string> building_;

    const json& entry(const std::string& section, const std::string& name) const;
    void build_all();
};

json matrix_to_json(const litalg::Matrix& m);
litalg::Matrix matrix_from_json(const litalg::Field& f, const json& j, std::size_t rows,
                                std::size_t cols, const std::string& what);

/// {"algebra": name, "dim": d, "actions": {generator label: matrix}}.
json module_to_json(const std::string& algebra_name, const litalg::Module& m);

litalg::QuiverAnSpec an_spec_from_json(const json& j);

}  // namespace litcalc
