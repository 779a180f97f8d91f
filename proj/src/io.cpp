#include "ncat/io.hpp"

#include <fstream>
#include <sstream>

namespace ncat::io {

  using nlohmann::json;

  namespace {

    [[noreturn]] void schema(std::string const& msg) {
      throw Error(ErrorKind::schema_error, msg);
    }

    [[noreturn]] void dangling(std::string const& id, std::string const& where) {
      throw Error(ErrorKind::dangling_reference, id + " (" + where + ")");
    }

    json const& field(json const& j, char const* key, std::string const& where) {
      if (!j.is_object()) {
        schema(where + ": expected an object");
      }
      auto it = j.find(key);
      if (it == j.end()) {
        schema(where + ": missing \"" + key + "\"");
      }
      return *it;
    }

    std::string str(json const& j, std::string const& where) {
      if (!j.is_string()) {
        schema(where + ": expected a string");
      }
      return j.get<std::string>();
    }

    std::int64_t integer(json const& j, std::string const& where) {
      if (!j.is_number_integer()) {
        schema(where + ": expected an integer");
      }
      return j.get<std::int64_t>();
    }

    json const& array(json const& j, std::string const& where) {
      if (!j.is_array()) {
        schema(where + ": expected an array");
      }
      return j;
    }

    json const& object(json const& j, std::string const& where) {
      if (!j.is_object()) {
        schema(where + ": expected an object");
      }
      return j;
    }

    std::string dim_name(int d) {
      return std::to_string(d) + "-cell";
    }

    ////////////////////////////////////////////////////////////////////////
    // Reading
    ////////////////////////////////////////////////////////////////////////

    json parse_json(std::string_view text) {
      try {
        return json::parse(text.begin(), text.end());
      } catch (json::parse_error const& e) {
        std::size_t const at   = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1,
                                                     text.size());
        std::size_t       line = 1, col = 1;
        for (std::size_t i = 0; i < at; ++i) {
          if (text[i] == '\n') {
            ++line;
            col = 1;
          } else {
            ++col;
          }
        }
        std::string what = e.what();
        if (auto p = what.find("syntax error"); p != std::string::npos) {
          what = what.substr(p);
        }
        throw Error(ErrorKind::syntax_error, "line " + std::to_string(line)
                                                 + ", column " + std::to_string(col)
                                                 + ": " + what);
      }
    }

    void check_version(json const& j) {
      std::string const v = str(field(j, "format_version", "document"), "format_version");
      if (v != format_version) {
        throw Error(ErrorKind::unknown_version,
                    "'" + v + "' (expected '" + std::string(format_version) + "')");
      }
    }

    GraphData graph_data(json const& j, std::string const& where) {
      std::int64_t const n = integer(field(j, "n", where), where + ".n");
      if (n < 0 || n > 64) {
        schema(where + ".n: out of range");
      }
      json const&        tail  = object(field(j, "tail", where), where + ".tail");
      std::int64_t const minus = integer(field(tail, "minus_one", where + ".tail"),
                                         where + ".tail.minus_one");
      if (minus < 0 || minus > 16) {
        schema(where + ".tail.minus_one: out of range");
      }
      GraphData d = GraphData::empty(int(n), Index(minus));
      d.ids.assign(n + 2, {});
      d.labels.assign(n + 2, {});

      std::vector<std::map<std::string, Index>> index(n + 2);
      if (auto it = tail.find("ids"); it != tail.end()) {
        auto const& ids = array(*it, where + ".tail.ids");
        if (ids.size() != std::size_t(minus)) {
          schema(where + ".tail.ids: expected " + std::to_string(minus) + " ids");
        }
        for (auto const& id : ids) {
          d.ids[0].push_back(str(id, where + ".tail.ids"));
        }
      } else {
        for (Index i = 0; i < Index(minus); ++i) {
          d.ids[0].push_back(default_id(-1, i));
        }
      }
      d.labels[0].assign(d.ids[0].size(), {});
      for (Index i = 0; i < d.ids[0].size(); ++i) {
        index[0].emplace(d.ids[0][i], i);
      }

      json const& dims = array(field(j, "dims", where), where + ".dims");
      if (dims.size() != std::size_t(n + 1)) {
        schema(where + ".dims: expected " + std::to_string(n + 1) + " dimensions");
      }
      for (int k = 0; k <= n; ++k) {
        std::string const at = where + ".dims[" + std::to_string(k) + "]";
        for (auto const& cell : array(dims[k], at)) {
          std::string const id = str(field(cell, "id", at), at + ".id");
          if (id.empty()) {
            schema(at + ": empty id");
          }
          auto resolve = [&](char const* key) {
            std::string const ref = str(field(cell, key, at), at + "." + key);
            auto it = index[k].find(ref);
            if (it == index[k].end()) {
              dangling(ref, std::string(key == std::string("src") ? "source" : "target")
                                + " of " + dim_name(k) + " " + id);
            }
            return it->second;
          };
          Index const s = resolve("src");
          Index const t = resolve("tgt");
          Index const i = d.add_cell(k, s, t, id);
          index[k + 1].emplace(id, i);
          std::string label;
          if (auto it = cell.find("label"); it != cell.end()) {
            label = str(*it, at + ".label");
          }
          d.labels[k + 1].push_back(std::move(label));
        }
      }

      json const* idents = nullptr;
      if (auto it = j.find("identities"); it != j.end()) {
        idents = &array(*it, where + ".identities");
        if (idents->size() != std::size_t(n)) {
          schema(where + ".identities: expected " + std::to_string(n) + " maps");
        }
      } else if (n > 0) {
        schema(where + ": missing \"identities\"");
      }
      for (int k = 0; k < n; ++k) {
        std::string const at = where + ".identities[" + std::to_string(k) + "]";
        d.idn[k].assign(d.count(k), undefined);
        for (auto const& [x, e] : object((*idents)[k], at).items()) {
          auto ix = index[k + 1].find(x);
          if (ix == index[k + 1].end()) {
            dangling(x, "identity key, expected a " + dim_name(k));
          }
          std::string const v  = str(e, at);
          auto              iv = index[k + 2].find(v);
          if (iv == index[k + 2].end()) {
            dangling(v, "identity of " + x + ", expected a " + dim_name(k + 1));
          }
          d.idn[k][ix->second] = iv->second;
        }
      }
      return d;
    }

    Index cell(NGraph const& g, int dim, std::string const& id, std::string const& where) {
      auto c = g.find(id);
      if (!c || c->dim != dim) {
        dangling(id, where + ", expected a " + dim_name(dim));
      }
      return c->index;
    }

    void read_tables(CategoryStructure& s, json const& j, std::string const& where) {
      auto it = j.find("tables");
      if (it == j.end()) {
        return;
      }
      NGraph const& g = *s.graph;
      for (auto const& t : array(*it, where + ".tables")) {
        std::string const kind = str(field(t, "kind", where + ".tables"), "kind");
        int               level = -1;
        if (auto il = t.find("level"); il != t.end()) {
          level = int(integer(*il, where + ".tables.level"));
        } else if (kind != "minus-one") {
          schema(where + ".tables: missing \"level\"");
        }
        std::string const at = where + ".tables[" + kind + " " + std::to_string(level) + "]";
        json const& entries = array(field(t, "entries", at), at + ".entries");

        if (kind == "co") {
          if (level < 0 || level >= g.n() || s.cotables.count(level)) {
            schema(at + ": bad or repeated level");
          }
          CocompTable ct{level, {}};
          for (auto const& e : entries) {
            if (!e.is_array() || e.size() != 4) {
              schema(at + ": co entries are [z, w, p, q]");
            }
            Index const z = cell(g, level + 1, str(e[0], at), at);
            ct.entries[z] = CoEntry{cell(g, level, str(e[1], at), at),
                                    cell(g, level + 1, str(e[2], at), at),
                                    cell(g, level + 1, str(e[3], at), at)};
          }
          s.cotables.emplace(level, std::move(ct));
          continue;
        }

        CompTable* table = nullptr;
        if (kind == "vertical" || kind == "minus-one") {
          if ((kind == "minus-one") != (level == -1)) {
            schema(at + ": level -1 tables have kind \"minus-one\"");
          }
          if (s.vtables.count(level)) {
            schema(at + ": repeated table");
          }
          table = &s.vertical(level);
        } else if (kind == "horizontal") {
          if (s.htables.count(level)) {
            schema(at + ": repeated table");
          }
          table = &s.horizontal(level);
        } else {
          schema(at + ": unknown kind '" + kind + "'");
        }
        int const dim = table->cell_dim();
        for (auto const& e : entries) {
          if (!e.is_array() || e.size() != 3) {
            schema(at + ": entries are [a, b, result]");
          }
          table->set(g, cell(g, dim, str(e[0], at), at), cell(g, dim, str(e[1], at), at),
                     cell(g, dim, str(e[2], at), at));
        }
      }
    }

    CategoryStructure structure(json const& j, std::string const& where) {
      auto g = std::make_shared<NGraph const>(NGraph::validate(graph_data(j, where)));
      AxiomFlags flags;
      if (auto it = j.find("flags"); it != j.end()) {
        flags = parse_flags(str(*it, where + ".flags"));
      }
      CategoryStructure s(g, flags);
      read_tables(s, j, where);
      return s;
    }

    // Total map from the cells of `from` at dim to cells of `to` at dim_to.
    std::vector<Index> cell_map(json const& j, NGraph const& from, int dim,
                                NGraph const& to, int dim_to, std::string const& where) {
      std::vector<Index> out(from.count(dim), undefined);
      for (auto const& [k, v] : object(j, where).items()) {
        out[cell(from, dim, k, where)] = cell(to, dim_to, str(v, where), where);
      }
      for (Index i = 0; i < out.size(); ++i) {
        if (out[i] == undefined) {
          schema(where + ": no image for " + from.id(dim, i));
        }
      }
      return out;
    }

    std::map<int, std::vector<Index>> dim_maps(json const& j, NGraph const& from,
                                               NGraph const& to, int shift,
                                               std::string const& where) {
      std::map<int, std::vector<Index>> out;
      for (auto const& [k, v] : object(j, where).items()) {
        int dim = 0;
        try {
          std::size_t used = 0;
          dim              = std::stoi(k, &used);
          if (used != k.size()) {
            throw std::invalid_argument(k);
          }
        } catch (std::exception const&) {
          schema(where + ": component keys are dimensions, got '" + k + "'");
        }
        if (dim < 0 || dim + shift > to.n() || dim > from.n()) {
          throw Error(ErrorKind::bad_level, where + ": dimension " + k);
        }
        out[dim] = cell_map(v, from, dim, to, dim + shift, where + "." + k);
      }
      return out;
    }

    json dim_maps_json(std::map<int, std::vector<Index>> const& comps, NGraph const& from,
                       NGraph const& to, int shift) {
      json out = json::object();
      for (auto const& [dim, v] : comps) {
        json m = json::object();
        for (Index i = 0; i < v.size(); ++i) {
          m[from.id(dim, i)] = v[i] == undefined ? json(nullptr) : json(to.id(dim + shift, v[i]));
        }
        out[std::to_string(dim)] = std::move(m);
      }
      return out;
    }

    ////////////////////////////////////////////////////////////////////////
    // Writing
    ////////////////////////////////////////////////////////////////////////

    json structure_json(CategoryStructure const& s) {
      NGraph const& g = *s.graph;
      json          j = json::object();
      j["n"]          = g.n();
      j["tail"]       = {{"minus_one", g.count(-1)}, {"ids", json::array()}};
      for (Index i = 0; i < g.count(-1); ++i) {
        j["tail"]["ids"].push_back(g.id(-1, i));
      }
      j["dims"] = json::array();
      for (int k = 0; k <= g.n(); ++k) {
        json cells = json::array();
        for (Index i = 0; i < g.count(k); ++i) {
          json c = {{"id", g.id(k, i)},
                    {"src", g.id(k - 1, g.src(k, i))},
                    {"tgt", g.id(k - 1, g.tgt(k, i))}};
          if (auto const& l = g.data().labels[k + 1][i]; !l.empty()) {
            c["label"] = l;
          }
          cells.push_back(std::move(c));
        }
        j["dims"].push_back(std::move(cells));
      }
      j["identities"] = json::array();
      for (int k = 0; k < g.n(); ++k) {
        json m = json::object();
        for (Index i = 0; i < g.count(k); ++i) {
          m[g.id(k, i)] = g.id(k + 1, g.idn(k, i));
        }
        j["identities"].push_back(std::move(m));
      }
      j["flags"]  = to_string(s.flags);
      json tables = json::array();
      auto emit   = [&](CompTable const& t) {
        int const  dim = t.cell_dim();
        json       e   = json::array();
        for (auto const& [a, b, v] : t.entries()) {
          e.push_back({g.id(dim, a), g.id(dim, b), g.id(dim, v)});
        }
        json out = {{"level", t.level()}, {"entries", std::move(e)}};
        out["kind"] = t.kind() == TableKind::horizontal ? "horizontal"
                      : t.level() == -1                 ? "minus-one"
                                                        : "vertical";
        tables.push_back(std::move(out));
      };
      for (auto const& [_, t] : s.vtables) {
        emit(t);
      }
      for (auto const& [_, t] : s.htables) {
        emit(t);
      }
      for (auto const& [level, t] : s.cotables) {
        json e = json::array();
        for (auto const& [z, c] : t.entries) {
          e.push_back({g.id(level + 1, z), g.id(level, c.w), g.id(level + 1, c.p),
                       g.id(level + 1, c.q)});
        }
        tables.push_back({{"kind", "co"}, {"level", level}, {"entries", std::move(e)}});
      }
      if (!tables.empty()) {
        j["tables"] = std::move(tables);
      }
      return j;
    }

    std::string dump(json const& j) {
      return j.dump(2) + "\n";
    }

    bool same(Transformation const& a, Transformation const& b) {
      return a.f == b.f && a.g == b.g && a.comps == b.comps;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Document
  ////////////////////////////////////////////////////////////////////////

  CategoryStructure const& Document::structure(std::string_view name) const {
    if (name == main_name) {
      return main;
    }
    auto it = structures.find(std::string(name));
    if (it == structures.end()) {
      dangling(std::string(name), "no such structure");
    }
    return it->second;
  }

  NamedMorphism const& Document::morphism(std::string_view name) const {
    for (auto const& m : morphisms) {
      if (m.name == name) {
        return m;
      }
    }
    dangling(std::string(name), "no such morphism");
  }

  NamedTransformation const& Document::transformation(std::string_view name) const {
    for (auto const& t : transformations) {
      if (t.name == name) {
        return t;
      }
    }
    dangling(std::string(name), "no such transformation");
  }

  NamedModification const& Document::modification(std::string_view name) const {
    for (auto const& m : modifications) {
      if (m.name == name) {
        return m;
      }
    }
    dangling(std::string(name), "no such modification");
  }

  bool operator==(Document const& a, Document const& b) {
    if (!(a.main == b.main) || a.structures.size() != b.structures.size()
        || a.morphisms.size() != b.morphisms.size()
        || a.transformations.size() != b.transformations.size()
        || a.modifications.size() != b.modifications.size()) {
      return false;
    }
    for (auto const& [k, v] : a.structures) {
      auto it = b.structures.find(k);
      if (it == b.structures.end() || !(it->second == v)) {
        return false;
      }
    }
    for (std::size_t i = 0; i < a.morphisms.size(); ++i) {
      auto const &x = a.morphisms[i], &y = b.morphisms[i];
      if (x.name != y.name || x.domain != y.domain || x.codomain != y.codomain
          || !(x.morphism == y.morphism)) {
        return false;
      }
    }
    for (std::size_t i = 0; i < a.transformations.size(); ++i) {
      auto const &x = a.transformations[i], &y = b.transformations[i];
      if (x.name != y.name || x.f != y.f || x.g != y.g
          || !same(x.transformation, y.transformation)) {
        return false;
      }
    }
    for (std::size_t i = 0; i < a.modifications.size(); ++i) {
      auto const &x = a.modifications[i], &y = b.modifications[i];
      if (x.name != y.name || x.s != y.s || x.t != y.t
          || !same(x.modification.s, y.modification.s)
          || !same(x.modification.t, y.modification.t)
          || x.modification.comps != y.modification.comps) {
        return false;
      }
    }
    return true;
  }

  GraphData parse_graph_data(std::string_view text) {
    json const j = parse_json(text);
    check_version(j);
    return graph_data(j, "document");
  }

  Document parse(std::string_view text) {
    json const j = parse_json(text);
    check_version(j);
    Document doc(structure(j, "document"));

    if (auto it = j.find("structures"); it != j.end()) {
      for (auto const& [name, sj] : object(*it, "structures").items()) {
        if (name == main_name) {
          schema("structures: the name \"main\" is reserved");
        }
        doc.structures.emplace(name, structure(sj, "structures." + name));
      }
    }

    auto names = [](json const& j, char const* key) -> json const& {
      static json const empty = json::array();
      auto              it    = j.find(key);
      return it == j.end() ? empty : array(*it, key);
    };
    auto opt_name = [](json const& e, char const* key, std::string const& where) {
      auto it = e.find(key);
      return it == e.end() ? std::string(main_name) : str(*it, where + "." + key);
    };
    auto check_unique = [](auto const& list, std::string const& name, char const* what) {
      for (auto const& x : list) {
        if (x.name == name) {
          schema(std::string(what) + ": repeated name '" + name + "'");
        }
      }
    };

    for (auto const& e : names(j, "morphisms")) {
      std::string const name  = str(field(e, "name", "morphisms"), "morphisms.name");
      std::string const where = "morphisms." + name;
      check_unique(doc.morphisms, name, "morphisms");
      NamedMorphism m{name, opt_name(e, "domain", where), opt_name(e, "codomain", where),
                      {}};
      auto const&   dom = doc.structure(m.domain);
      auto const&   cod = doc.structure(m.codomain);
      if (dom.graph->n() != cod.graph->n()) {
        throw Error(ErrorKind::dimension_mismatch,
                    where + ": domain and codomain differ in n");
      }
      m.morphism.domain   = dom.graph;
      m.morphism.codomain = cod.graph;
      m.morphism.comps.push_back(
          cell_map(field(e, "tail", where), *dom.graph, -1, *cod.graph, -1, where + ".tail"));
      json const& cells = array(field(e, "cells", where), where + ".cells");
      if (cells.size() != std::size_t(dom.graph->n() + 1)) {
        schema(where + ".cells: expected one map per dimension 0..n");
      }
      for (int k = 0; k <= dom.graph->n(); ++k) {
        m.morphism.comps.push_back(cell_map(cells[k], *dom.graph, k, *cod.graph, k,
                                            where + ".cells[" + std::to_string(k) + "]"));
      }
      doc.morphisms.push_back(std::move(m));
    }

    for (auto const& e : names(j, "transformations")) {
      std::string const name = str(field(e, "name", "transformations"), "transformations.name");
      std::string const where = "transformations." + name;
      check_unique(doc.transformations, name, "transformations");
      NamedTransformation t{name, str(field(e, "f", where), where + ".f"),
                            str(field(e, "g", where), where + ".g"), {}};
      auto const& f = doc.morphism(t.f).morphism;
      auto const& g = doc.morphism(t.g).morphism;
      t.transformation.f     = f;
      t.transformation.g     = g;
      t.transformation.comps = dim_maps(field(e, "components", where), *f.domain,
                                        *f.codomain, 1, where + ".components");
      doc.transformations.push_back(std::move(t));
    }

    for (auto const& e : names(j, "modifications")) {
      std::string const name = str(field(e, "name", "modifications"), "modifications.name");
      std::string const where = "modifications." + name;
      check_unique(doc.modifications, name, "modifications");
      NamedModification m{name, str(field(e, "s", where), where + ".s"),
                          str(field(e, "t", where), where + ".t"), {}};
      m.modification.s = doc.transformation(m.s).transformation;
      m.modification.t = doc.transformation(m.t).transformation;
      auto const& f    = m.modification.s.f;
      m.modification.comps = dim_maps(field(e, "components", where), *f.domain,
                                      *f.codomain, 2, where + ".components");
      doc.modifications.push_back(std::move(m));
    }
    return doc;
  }

  Document read_file(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error(ErrorKind::syntax_error, "cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
  }

  json to_json(Document const& doc) {
    json j              = structure_json(doc.main);
    j["format_version"] = format_version;
    if (!doc.structures.empty()) {
      json s = json::object();
      for (auto const& [name, st] : doc.structures) {
        s[name] = structure_json(st);
      }
      j["structures"] = std::move(s);
    }
    if (!doc.morphisms.empty()) {
      json list = json::array();
      for (auto const& m : doc.morphisms) {
        NGraph const& a = *m.morphism.domain;
        NGraph const& b = *m.morphism.codomain;
        auto          one = [&](int dim) {
          json out = json::object();
          for (Index i = 0; i < a.count(dim); ++i) {
            out[a.id(dim, i)] = b.id(dim, m.morphism(dim, i));
          }
          return out;
        };
        json e = {{"name", m.name}, {"domain", m.domain}, {"codomain", m.codomain},
                  {"tail", one(-1)}, {"cells", json::array()}};
        for (int k = 0; k <= a.n(); ++k) {
          e["cells"].push_back(one(k));
        }
        list.push_back(std::move(e));
      }
      j["morphisms"] = std::move(list);
    }
    if (!doc.transformations.empty()) {
      json list = json::array();
      for (auto const& t : doc.transformations) {
        auto const& f = t.transformation.f;
        list.push_back({{"name", t.name}, {"f", t.f}, {"g", t.g},
                        {"components",
                         dim_maps_json(t.transformation.comps, *f.domain, *f.codomain, 1)}});
      }
      j["transformations"] = std::move(list);
    }
    if (!doc.modifications.empty()) {
      json list = json::array();
      for (auto const& m : doc.modifications) {
        auto const& f = m.modification.s.f;
        list.push_back({{"name", m.name}, {"s", m.s}, {"t", m.t},
                        {"components",
                         dim_maps_json(m.modification.comps, *f.domain, *f.codomain, 2)}});
      }
      j["modifications"] = std::move(list);
    }
    return j;
  }

  std::string serialize(Document const& doc) {
    return dump(to_json(doc));
  }

  std::string serialize(CategoryStructure const& s) {
    return serialize(Document(s));
  }

  std::string serialize(NGraph const& g) {
    return serialize(CategoryStructure(std::make_shared<NGraph const>(g)));
  }

  ////////////////////////////////////////////////////////////////////////
  // Reports
  ////////////////////////////////////////////////////////////////////////

  std::string ReportDocument::verdict() const {
    if (!exhausted) {
      return "limit";
    }
    return report.passed() ? "pass" : "fail";
  }

  int ReportDocument::exit_code() const {
    if (!exhausted) {
      return 3;
    }
    return report.passed() ? 0 : 1;
  }

  json to_json(AxiomResult const& r) {
    auto ce = [](std::vector<Counterexample> const& list) {
      json out = json::array();
      for (auto const& c : list) {
        out.push_back({{"cells", c.cells}, {"expected", c.expected},
                       {"actual", c.actual}, {"what", c.what}});
      }
      return out;
    };
    json j = {{"axiom", r.axiom},
              {"verdict", std::string(to_string(r.verdict))},
              {"counterexamples", ce(r.counterexamples)},
              {"asymmetries", ce(r.asymmetries)},
              {"note", r.note}};
    j["level"] = r.level ? json(*r.level) : json(nullptr);
    return j;
  }

  json to_json(ReportDocument const& r) {
    json checks = json::array();
    for (auto const& res : r.report.results) {
      checks.push_back(to_json(res));
    }
    json counts = json::object();
    if (r.raw_count) {
      counts["raw"] = *r.raw_count;
    }
    if (r.iso_count) {
      counts["iso"] = *r.iso_count;
    }
    return {{"format_version", report_version},
            {"command", r.command},
            {"verdict", r.verdict()},
            {"exit_code", r.exit_code()},
            {"checks", std::move(checks)},
            {"counterexample_count", r.report.counterexample_count()},
            {"counts", std::move(counts)},
            {"exhausted", r.exhausted},
            {"timing", {{"seconds", r.seconds}}},
            {"data", r.data}};
  }

}  // namespace ncat::io
