#include "froblab/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "froblab/fbn.hpp"

namespace froblab {

using ojson = nlohmann::ordered_json;

namespace {

std::string error_head(LoadErrorKind kind) {
  switch (kind) {
    case LoadErrorKind::Parse:
      return "parse error";
    case LoadErrorKind::Schema:
      return "schema error";
    case LoadErrorKind::Scalar:
      return "scalar error";
  }
  return "error";
}

std::string compose_message(LoadErrorKind kind, const std::string& subject,
                            const std::string& location, const std::string& detail) {
  std::string s = error_head(kind) + ": " + subject;
  if (!location.empty()) s += ": " + location;
  return s + ": " + detail;
}

}  // namespace

LoadError::LoadError(LoadErrorKind kind_in, const std::string& subject_in,
                     const std::string& location_in, const std::string& detail_in)
    : InvalidInput(compose_message(kind_in, subject_in, location_in, detail_in)),
      kind(kind_in),
      subject(subject_in),
      location(location_in),
      detail(detail_in) {}

// ---- loading ----------------------------------------------------------------

namespace {

struct Ctx {
  std::string subject;

  [[noreturn]] void schema(const std::string& path, const std::string& detail) const {
    throw LoadError(LoadErrorKind::Schema, subject, path, detail);
  }
};

const ojson& member(const Ctx& c, const ojson& j, const std::string& path, const char* key) {
  if (!j.is_object()) c.schema(path.empty() ? "/" : path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) c.schema(path, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string sub(const std::string& path, const std::string& key) { return path + "/" + key; }

std::string read_string(const Ctx& c, const ojson& j, const std::string& path) {
  if (!j.is_string()) c.schema(path, "expected a string");
  return j.get<std::string>();
}

std::size_t read_dim(const Ctx& c, const ojson& j, const std::string& path) {
  if (!j.is_number_unsigned()) c.schema(path, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

FieldSpec read_field(const Ctx& c, const ojson& j, const std::string& path) {
  std::string text = read_string(c, j, path);
  if (text == "Q") return FieldSpec::rationals();
  if (text.size() > 2 && text.compare(0, 2, "F_") == 0) {
    try {
      return FieldSpec::prime(std::stol(text.substr(2)));
    } catch (const FieldError& e) {
      c.schema(path, e.what());
    } catch (const std::exception&) {
      c.schema(path, "malformed field name \"" + text + "\"");
    }
  }
  c.schema(path, "unknown field \"" + text + "\" (expected \"Q\" or \"F_<p>\")");
}

Scalar read_scalar(const Ctx& c, const FieldSpec& f, const ojson& j, const std::string& path) {
  if (!j.is_string()) c.schema(path, "scalars must be strings");
  try {
    return f.parse(j.get<std::string>());
  } catch (const ScalarFormatError& e) {
    throw LoadError(LoadErrorKind::Scalar, c.subject, path, e.what());
  } catch (const FieldError& e) {
    throw LoadError(LoadErrorKind::Scalar, c.subject, path, e.what());
  }
}

Vec read_vec_any(const Ctx& c, const FieldSpec& f, const ojson& j, const std::string& path) {
  if (!j.is_array()) c.schema(path, "expected an array of scalars");
  Vec v;
  v.reserve(j.size());
  for (std::size_t t = 0; t < j.size(); ++t)
    v.push_back(read_scalar(c, f, j[t], sub(path, std::to_string(t))));
  return v;
}

Vec read_vec(const Ctx& c, const FieldSpec& f, const ojson& j, const std::string& path,
             std::size_t len) {
  if (!j.is_array()) c.schema(path, "expected an array of scalars");
  if (j.size() != len)
    c.schema(path, "expected " + std::to_string(len) + " entries, found " +
                       std::to_string(j.size()));
  return read_vec_any(c, f, j, path);
}

Matrix read_matrix(const Ctx& c, const FieldSpec& f, const ojson& j, const std::string& path,
                   std::size_t rows, std::size_t cols) {
  if (!j.is_array()) c.schema(path, "expected an array of rows");
  if (j.size() != rows)
    c.schema(path,
             "expected " + std::to_string(rows) + " rows, found " + std::to_string(j.size()));
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    Vec row = read_vec(c, f, j[r], sub(path, std::to_string(r)), cols);
    m.set_row(r, row);
  }
  return m;
}

/// A matrix whose row count is only known after tensor quotients are
/// computed; the loader checks the column count and rectangularity.
Matrix read_matrix_free_rows(const Ctx& c, const FieldSpec& f, const ojson& j,
                             const std::string& path, std::size_t cols) {
  if (!j.is_array()) c.schema(path, "expected an array of rows");
  return read_matrix(c, f, j, path, j.size(), cols);
}

std::vector<Matrix> read_matrix_list(const Ctx& c, const FieldSpec& f, const ojson& j,
                                     const std::string& path, std::size_t count, std::size_t rows,
                                     std::size_t cols) {
  if (!j.is_array()) c.schema(path, "expected an array of matrices");
  if (j.size() != count)
    c.schema(path, "expected " + std::to_string(count) + " matrices, found " +
                       std::to_string(j.size()));
  std::vector<Matrix> out;
  out.reserve(count);
  for (std::size_t t = 0; t < count; ++t)
    out.push_back(read_matrix(c, f, j[t], sub(path, std::to_string(t)), rows, cols));
  return out;
}

AlgebraPtr read_algebra(const Ctx& c, const FieldSpec& f, const ojson& j,
                        const std::string& path) {
  const ojson& basis = member(c, j, path, "basis");
  if (!basis.is_array() || basis.empty())
    c.schema(sub(path, "basis"), "expected a nonempty array of names");
  std::vector<std::string> names;
  names.reserve(basis.size());
  for (std::size_t t = 0; t < basis.size(); ++t)
    names.push_back(read_string(c, basis[t], sub(path, "basis/" + std::to_string(t))));
  std::size_t dim = names.size();

  const ojson& table = member(c, j, path, "table");
  if (!table.is_array() || table.size() != dim)
    c.schema(sub(path, "table"), "expected " + std::to_string(dim) + " rows of products");
  std::vector<Scalar> structure(dim * dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const ojson& row = table[i];
    std::string row_path = sub(path, "table/" + std::to_string(i));
    if (!row.is_array() || row.size() != dim)
      c.schema(row_path, "expected " + std::to_string(dim) + " products");
    for (std::size_t jj = 0; jj < dim; ++jj) {
      Vec prod = read_vec(c, f, row[jj], sub(row_path, std::to_string(jj)), dim);
      for (std::size_t k = 0; k < dim; ++k) structure[(i * dim + jj) * dim + k] = prod[k];
    }
  }

  Vec unit = read_vec(c, f, member(c, j, path, "unit"), sub(path, "unit"), dim);
  return make_algebra(f, std::move(names), std::move(structure), std::move(unit));
}

Bimodule read_bimodule(const Ctx& c, const FieldSpec& f, const ojson& j, const std::string& path,
                       AlgebraPtr left, AlgebraPtr right) {
  Bimodule b;
  b.left_algebra = left;
  b.right_algebra = right;
  b.dim = read_dim(c, member(c, j, path, "dim"), sub(path, "dim"));
  b.left_actions =
      read_matrix_list(c, f, member(c, j, path, "left"), sub(path, "left"), left->dim, b.dim, b.dim);
  b.right_actions = read_matrix_list(c, f, member(c, j, path, "right"), sub(path, "right"),
                                     right->dim, b.dim, b.dim);
  return b;
}

HopfPresentation read_hopf(const Ctx& c, const FieldSpec& f, const ojson& j,
                           const std::string& path) {
  AlgebraPtr h = read_algebra(c, f, member(c, j, path, "H"), sub(path, "H"));
  std::size_t n = h->dim;
  Matrix comul = read_matrix(c, f, member(c, j, path, "comul"), sub(path, "comul"), n * n, n);
  Matrix counit = read_matrix(c, f, member(c, j, path, "counit"), sub(path, "counit"), 1, n);
  Matrix antipode =
      read_matrix(c, f, member(c, j, path, "antipode"), sub(path, "antipode"), n, n);
  return make_hopf(std::move(h), std::move(comul), std::move(counit), std::move(antipode));
}

Handedness read_handed(const Ctx& c, const ojson& j, const std::string& path) {
  std::string text = read_string(c, j, path);
  if (text == "right") return Handedness::Right;
  if (text == "left") return Handedness::Left;
  c.schema(path, "expected \"right\" or \"left\"");
}

BundlePayload parse_payload(const Ctx& c, const std::string& kind, const FieldSpec& f,
                            const ojson& j) {
  if (kind == "algebra") {
    return AlgebraBundle{read_algebra(c, f, member(c, j, "", "algebra"), "/algebra")};
  }

  if (kind == "module") {
    AlgebraPtr a = read_algebra(c, f, member(c, j, "", "algebra"), "/algebra");
    std::size_t dim = read_dim(c, member(c, j, "", "dim"), "/dim");
    std::vector<Matrix> actions =
        read_matrix_list(c, f, member(c, j, "", "actions"), "/actions", a->dim, dim, dim);
    return ModuleBundle{RightModule{std::move(a), dim, std::move(actions)}};
  }

  if (kind == "aring") {
    AlgebraPtr a = read_algebra(c, f, member(c, j, "", "A"), "/A");
    AlgebraPtr r = read_algebra(c, f, member(c, j, "", "R"), "/R");
    Matrix i = read_matrix(c, f, member(c, j, "", "i"), "/i", r->dim, a->dim);
    Matrix chi = read_matrix(c, f, member(c, j, "", "chi"), "/chi", a->dim, r->dim);
    Handedness handed = read_handed(c, member(c, j, "", "handed"), "/handed");
    return AringBundle{std::move(a), std::move(r), std::move(i), std::move(chi), handed};
  }

  if (kind == "frobenius") {
    std::string form = read_string(c, member(c, j, "", "form"), "/form");
    if (form == "classical") {
      AlgebraPtr s = read_algebra(c, f, member(c, j, "", "S"), "/S");
      Vec e = read_vec(c, f, member(c, j, "", "e"), "/e", s->dim * s->dim);
      Matrix nu = read_matrix(c, f, member(c, j, "", "nu"), "/nu", 1, s->dim);
      return FrobeniusAlgebraBundle{
          make_frobenius_algebra(std::move(s), std::move(e), std::move(nu))};
    }
    if (form != "system") c.schema("/form", "expected \"system\" or \"classical\"");

    AlgebraPtr a = read_algebra(c, f, member(c, j, "", "A"), "/A");
    AlgebraPtr r = read_algebra(c, f, member(c, j, "", "R"), "/R");
    Matrix i = read_matrix(c, f, member(c, j, "", "i"), "/i", r->dim, a->dim);
    std::optional<Matrix> chi;
    const ojson& chi_j = member(c, j, "", "chi");
    if (!chi_j.is_null()) chi = read_matrix(c, f, chi_j, "/chi", a->dim, r->dim);

    const ojson& ctx_j = member(c, j, "", "context");
    Bimodule imod = read_bimodule(c, f, member(c, ctx_j, "/context", "I"), "/context/I", a, a);
    Bimodule jmod = read_bimodule(c, f, member(c, ctx_j, "/context", "J"), "/context/J", a, a);
    Matrix fm = read_matrix(c, f, member(c, ctx_j, "/context", "f"), "/context/f", a->dim,
                            imod.dim * jmod.dim);
    Matrix gm = read_matrix(c, f, member(c, ctx_j, "/context", "g"), "/context/g", a->dim,
                            jmod.dim * imod.dim);
    Vec f_inv_one = read_vec(c, f, member(c, ctx_j, "/context", "f_inv_one"),
                             "/context/f_inv_one", imod.dim * jmod.dim);
    MoritaContext ctx = make_morita_context(a, std::move(imod), std::move(jmod), std::move(fm),
                                            std::move(gm), std::move(f_inv_one));

    Vec e = read_vec_any(c, f, member(c, j, "", "e"), "/e");
    Matrix nu = read_matrix(c, f, member(c, j, "", "nu"), "/nu", a->dim, r->dim * ctx.I.dim);
    return FrobeniusSystemBundle{std::move(a),   std::move(r), std::move(i), std::move(chi),
                                 std::move(ctx), std::move(e), std::move(nu)};
  }

  if (kind == "hopf") {
    return HopfBundle{read_hopf(c, f, j, "")};
  }

  if (kind == "action") {
    HopfPresentation hopf = read_hopf(c, f, member(c, j, "", "hopf"), "/hopf");
    AlgebraPtr a = read_algebra(c, f, member(c, j, "", "A"), "/A");
    std::vector<Matrix> action = read_matrix_list(c, f, member(c, j, "", "action"), "/action",
                                                  hopf.H->dim, a->dim, a->dim);
    return ActionBundle{ModuleAlgebraAction{std::move(hopf), std::move(a), std::move(action)}};
  }

  if (kind == "coring") {
    AlgebraPtr a = read_algebra(c, f, member(c, j, "", "A"), "/A");
    Bimodule cm = read_bimodule(c, f, member(c, j, "", "C"), "/C", a, a);
    Matrix comul = read_matrix_free_rows(c, f, member(c, j, "", "comul"), "/comul", cm.dim);
    Matrix counit = read_matrix(c, f, member(c, j, "", "counit"), "/counit", a->dim, cm.dim);

    std::optional<Vec> grouplike;
    const ojson& g_j = member(c, j, "", "grouplike");
    if (!g_j.is_null()) grouplike = read_vec(c, f, g_j, "/grouplike", cm.dim);

    const ojson& theta_j = member(c, j, "", "theta");
    const ojson& z_j = member(c, j, "", "z");
    if (theta_j.is_null() != z_j.is_null())
      c.schema("/theta", "theta and z must be given together or both be null");
    std::optional<FrobeniusCoringSystem> frob;
    if (!theta_j.is_null()) {
      Matrix theta(f, a->dim, 0);
      if (!theta_j.is_array() || theta_j.size() != a->dim)
        c.schema("/theta", "expected " + std::to_string(a->dim) + " rows");
      theta = read_matrix(c, f, theta_j, "/theta", a->dim,
                          theta_j.empty() || !theta_j[0].is_array() ? 0 : theta_j[0].size());
      Vec z = read_vec(c, f, z_j, "/z", cm.dim);
      frob = FrobeniusCoringSystem{std::move(theta), std::move(z)};
    }
    return CoringBundle{std::move(a),     std::move(cm),       std::move(comul),
                        std::move(counit), std::move(grouplike), std::move(frob)};
  }

  c.schema("/kind", "unknown kind \"" + kind + "\"");
}

}  // namespace

BundleFile parse_bundle(const std::string& text, const std::string& subject) {
  Ctx c{subject};
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    throw LoadError(LoadErrorKind::Parse, subject, "", e.what());
  }
  if (!j.is_object()) c.schema("/", "expected a JSON object");

  BundleFile b;
  b.kind = read_string(c, member(c, j, "", "kind"), "/kind");
  b.field = read_field(c, member(c, j, "", "field"), "/field");
  b.payload = parse_payload(c, b.kind, b.field, j);
  return b;
}

BundleFile load_bundle(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError(LoadErrorKind::Parse, path, "", "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_bundle(buf.str(), path);
}

// ---- storing ----------------------------------------------------------------

namespace {

ojson vec_json(const FieldSpec& f, const Vec& v) {
  ojson arr = ojson::array();
  for (const Scalar& s : v) arr.push_back(f.to_string(s));
  return arr;
}

ojson matrix_json(const FieldSpec& f, const Matrix& m) {
  ojson arr = ojson::array();
  for (std::size_t r = 0; r < m.rows(); ++r) arr.push_back(vec_json(f, m.row(r)));
  return arr;
}

ojson matrix_list_json(const FieldSpec& f, const std::vector<Matrix>& ms) {
  ojson arr = ojson::array();
  for (const Matrix& m : ms) arr.push_back(matrix_json(f, m));
  return arr;
}

ojson algebra_json(const Algebra& a) {
  const FieldSpec& f = a.field;
  ojson out;
  out["basis"] = a.basis_names;
  ojson table = ojson::array();
  for (std::size_t i = 0; i < a.dim; ++i) {
    ojson row = ojson::array();
    for (std::size_t j = 0; j < a.dim; ++j) {
      Vec prod(a.dim);
      for (std::size_t k = 0; k < a.dim; ++k) prod[k] = a.c(i, j, k);
      row.push_back(vec_json(f, prod));
    }
    table.push_back(std::move(row));
  }
  out["table"] = std::move(table);
  out["unit"] = vec_json(f, a.unit);
  return out;
}

ojson bimodule_json(const FieldSpec& f, const Bimodule& b) {
  ojson out;
  out["dim"] = b.dim;
  out["left"] = matrix_list_json(f, b.left_actions);
  out["right"] = matrix_list_json(f, b.right_actions);
  return out;
}

ojson hopf_json(const FieldSpec& f, const HopfPresentation& h) {
  ojson out;
  out["H"] = algebra_json(*h.H);
  out["comul"] = matrix_json(f, h.comul);
  out["counit"] = matrix_json(f, h.counit);
  out["antipode"] = matrix_json(f, h.antipode);
  return out;
}

struct StoreVisitor {
  const FieldSpec& f;
  ojson& root;

  void operator()(const AlgebraBundle& b) const { root["algebra"] = algebra_json(*b.algebra); }

  void operator()(const ModuleBundle& b) const {
    root["algebra"] = algebra_json(*b.module.algebra);
    root["dim"] = b.module.dim;
    root["actions"] = matrix_list_json(f, b.module.actions);
  }

  void operator()(const AringBundle& b) const {
    root["A"] = algebra_json(*b.A);
    root["R"] = algebra_json(*b.R);
    root["i"] = matrix_json(f, b.i);
    root["chi"] = matrix_json(f, b.chi);
    root["handed"] = b.handed == Handedness::Right ? "right" : "left";
  }

  void operator()(const FrobeniusSystemBundle& b) const {
    root["form"] = "system";
    root["A"] = algebra_json(*b.A);
    root["R"] = algebra_json(*b.R);
    root["i"] = matrix_json(f, b.i);
    root["chi"] = b.chi ? matrix_json(f, *b.chi) : ojson(nullptr);
    ojson ctx;
    ctx["I"] = bimodule_json(f, b.context.I);
    ctx["J"] = bimodule_json(f, b.context.J);
    ctx["f"] = matrix_json(f, b.context.f);
    ctx["g"] = matrix_json(f, b.context.g);
    ctx["f_inv_one"] = vec_json(f, b.context.f_inv_one);
    root["context"] = std::move(ctx);
    root["e"] = vec_json(f, b.e);
    root["nu"] = matrix_json(f, b.nu);
  }

  void operator()(const FrobeniusAlgebraBundle& b) const {
    root["form"] = "classical";
    root["S"] = algebra_json(*b.data.S);
    root["e"] = vec_json(f, b.data.e);
    root["nu"] = matrix_json(f, b.data.nu);
  }

  void operator()(const HopfBundle& b) const {
    ojson h = hopf_json(f, b.hopf);
    for (auto& [key, value] : h.items()) root[key] = std::move(value);
  }

  void operator()(const ActionBundle& b) const {
    root["hopf"] = hopf_json(f, b.action.hopf);
    root["A"] = algebra_json(*b.action.A);
    root["action"] = matrix_list_json(f, b.action.action);
  }

  void operator()(const CoringBundle& b) const {
    root["A"] = algebra_json(*b.A);
    root["C"] = bimodule_json(f, b.C);
    root["comul"] = matrix_json(f, b.comul);
    root["counit"] = matrix_json(f, b.counit);
    root["grouplike"] = b.grouplike ? vec_json(f, *b.grouplike) : ojson(nullptr);
    root["theta"] = b.frob ? matrix_json(f, b.frob->theta) : ojson(nullptr);
    root["z"] = b.frob ? vec_json(f, b.frob->z) : ojson(nullptr);
  }
};

}  // namespace

std::string store_bundle(const BundleFile& b) {
  ojson root;
  root["kind"] = b.kind;
  root["field"] = b.field.describe();
  std::visit(StoreVisitor{b.field, root}, b.payload);
  return root.dump(2) + "\n";
}

void save_bundle(const BundleFile& b, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write file " + path);
  out << store_bundle(b);
}

// ---- model construction and verification ------------------------------------

ARingWithCharacter AringBundle::character_ring() const {
  return make_character_ring(ARing{A, R, AlgebraMap{A, R, i, true}}, chi, handed);
}

FrobeniusSystem FrobeniusSystemBundle::system() const {
  return make_frobenius_system(ARing{A, R, AlgebraMap{A, R, i, true}}, context, e, nu, chi);
}

CoringPresentation CoringBundle::coring() const { return make_coring(A, C, comul, counit); }

namespace {

struct VerifyVisitor {
  const BundleFile& file;

  Report operator()(const AlgebraBundle& b) const { return check_algebra(*b.algebra); }

  Report operator()(const ModuleBundle& b) const {
    Report rep;
    rep.append_prefixed(check_algebra(*b.module.algebra), "algebra");
    if (!rep.ok()) return rep;
    rep.append(check_module(b.module));
    return rep;
  }

  Report operator()(const AringBundle& b) const { return verify_character(b.character_ring()); }

  Report operator()(const FrobeniusSystemBundle& b) const { return verify_frobenius(b.system()); }

  Report operator()(const FrobeniusAlgebraBundle& b) const {
    return verify_frobenius_algebra(b.data);
  }

  Report operator()(const HopfBundle& b) const { return verify_hopf(b.hopf); }

  Report operator()(const ActionBundle& b) const { return check_module_algebra(b.action); }

  Report operator()(const CoringBundle& b) const {
    Report rep;
    rep.append_prefixed(check_algebra(*b.A), "A");
    if (!rep.ok()) return rep;
    CoringPresentation c = b.coring();
    if (b.frob)
      rep.append(verify_frobenius_coring(c, *b.frob));
    else
      rep.append(verify_coring(c));
    if (b.grouplike) {
      auto& g = rep.start("grouplike", "Delta(x) = x (x) x and eps(x) = 1");
      record(g, is_grouplike(c, *b.grouplike), "x");
    }
    return rep;
  }
};

}  // namespace

Report verify_bundle(const BundleFile& b) { return std::visit(VerifyVisitor{b}, b.payload); }

BundleFile bundle_from_system(const FrobeniusSystem& sys) {
  BundleFile b;
  b.kind = "frobenius";
  b.field = sys.ring.A->field;
  b.payload = FrobeniusSystemBundle{sys.ring.A, sys.ring.R, sys.ring.i.matrix,
                                    sys.chi,    sys.ctx,    sys.e,
                                    sys.nu};
  return b;
}

BundleFile bundle_from_character_ring(const ARingWithCharacter& rc) {
  BundleFile b;
  b.kind = "aring";
  b.field = rc.ring.A->field;
  b.payload = AringBundle{rc.ring.A, rc.ring.R, rc.ring.i.matrix, rc.chi, rc.handed};
  return b;
}

// ---- the command surface ----------------------------------------------------

namespace {

std::string csv(const FieldSpec& f, const Vec& v) {
  std::string s;
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (t) s += ",";
    s += f.to_string(v[t]);
  }
  return s;
}

ojson csv_or_null(const FieldSpec& f, const std::optional<Vec>& v) {
  return v ? ojson(csv(f, *v)) : ojson(nullptr);
}

ojson subspace_json(const Subspace& s) {
  const FieldSpec& f = s.field();
  ojson arr = ojson::array();
  for (std::size_t t = 0; t < s.dim(); ++t) arr.push_back(csv(f, s.basis_vector(t)));
  return arr;
}

ojson matrix_csv_json(const FieldSpec& f, const Matrix& m) {
  ojson arr = ojson::array();
  for (std::size_t r = 0; r < m.rows(); ++r) arr.push_back(csv(f, m.row(r)));
  return arr;
}

int emit(std::ostream& out, const std::string& subject, const std::string& command,
         const Report& rep, ojson computed) {
  ojson root;
  root["subject"] = subject;
  root["command"] = command;
  root["ok"] = rep.ok();
  ojson checks = ojson::array();
  for (const CheckResult& c : rep.checks) {
    ojson entry;
    entry["name"] = c.name;
    entry["law"] = c.law;
    entry["pass"] = c.pass;
    entry["counterexamples"] = c.counterexamples;
    checks.push_back(std::move(entry));
  }
  root["checks"] = std::move(checks);
  root["computed"] = std::move(computed);
  out << root.dump(2) << "\n";
  return rep.ok() ? 0 : 1;
}

const AringBundle& as_aring(const BundleFile& b) {
  if (const auto* p = std::get_if<AringBundle>(&b.payload)) return *p;
  throw InvalidInput("expected an aring file, got kind \"" + b.kind + "\"");
}

const ModuleBundle& as_module(const BundleFile& b) {
  if (const auto* p = std::get_if<ModuleBundle>(&b.payload)) return *p;
  throw InvalidInput("expected a module file, got kind \"" + b.kind + "\"");
}

const AlgebraBundle& as_algebra(const BundleFile& b) {
  if (const auto* p = std::get_if<AlgebraBundle>(&b.payload)) return *p;
  throw InvalidInput("expected an algebra file, got kind \"" + b.kind + "\"");
}

const ActionBundle& as_action(const BundleFile& b) {
  if (const auto* p = std::get_if<ActionBundle>(&b.payload)) return *p;
  throw InvalidInput("expected an action file, got kind \"" + b.kind + "\"");
}

const CoringBundle& as_coring(const BundleFile& b) {
  if (const auto* p = std::get_if<CoringBundle>(&b.payload)) return *p;
  throw InvalidInput("expected a coring file, got kind \"" + b.kind + "\"");
}

AlgebraMap identity_self_map(AlgebraPtr a) {
  return make_algebra_map(a, a, Matrix::identity(a->field, a->dim));
}

int cmd_verify(std::ostream& out, const std::string& path) {
  BundleFile b = load_bundle(path);
  return emit(out, path, "verify", verify_bundle(b), ojson::object());
}

int cmd_invariants(std::ostream& out, const std::string& path,
                   const std::optional<std::string>& module_path) {
  BundleFile b = load_bundle(path);
  ARingWithCharacter rc = as_aring(b).character_ring();
  Report rep = verify_character(rc);

  std::optional<RightModule> mod;
  if (module_path) {
    BundleFile mb = load_bundle(*module_path);
    mod = as_module(mb).module;
    rep.append_prefixed(check_module(*mod), "module");
  }
  if (!rep.ok()) return emit(out, path, "invariants", rep, ojson::object());

  InvariantsBundle inv = invariants(rc, mod ? &*mod : nullptr);
  ojson computed;
  computed["B"] = subspace_json(inv.B);
  computed["Q"] = subspace_json(inv.Q);
  computed["MR"] = inv.MR ? subspace_json(*inv.MR) : ojson(nullptr);
  return emit(out, path, "invariants", rep, std::move(computed));
}

int cmd_projective(std::ostream& out, const std::string& path) {
  BundleFile b = load_bundle(path);
  ARingWithCharacter rc = as_aring(b).character_ring();
  Report rep = verify_character(rc);
  if (!rep.ok()) return emit(out, path, "projective", rep, ojson::object());

  ojson computed;
  computed["witness"] = csv_or_null(b.field, projectivity_witness(rc));
  return emit(out, path, "projective", rep, std::move(computed));
}

int cmd_quasiprojective(std::ostream& out, const std::string& path) {
  BundleFile b = load_bundle(path);
  ARingWithCharacter rc = as_aring(b).character_ring();
  Report rep = verify_character(rc);
  if (!rep.ok()) return emit(out, path, "quasiprojective", rep, ojson::object());

  QuasiProjectivityResult qp = is_quasi_projective(rc);
  ojson computed;
  computed["quasi_projective"] = qp.quasi_projective;
  computed["submodules_checked"] = qp.submodules_checked;
  computed["failing_submodule"] =
      qp.failing_submodule ? subspace_json(*qp.failing_submodule) : ojson(nullptr);
  return emit(out, path, "quasiprojective", rep, std::move(computed));
}

int cmd_frobenius(std::ostream& out, const std::string& path) {
  BundleFile b = load_bundle(path);
  if (const auto* fb = std::get_if<FrobeniusSystemBundle>(&b.payload)) {
    FrobeniusSystem sys = fb->system();
    Report rep = verify_frobenius(sys);
    ojson computed;
    computed["character_present"] = sys.chi.has_value();
    if (rep.ok() && sys.chi) {
      TraceData td = make_trace_data(sys);
      rep.append_prefixed(td.report, "trace");
      computed["trace"] = matrix_csv_json(b.field, td.trace);
      computed["witness"] = csv_or_null(b.field, trace_one_witness(sys));
    }
    return emit(out, path, "frobenius", rep, std::move(computed));
  }
  if (const auto* cb = std::get_if<FrobeniusAlgebraBundle>(&b.payload)) {
    Report rep = verify_frobenius_algebra(cb->data);
    ojson computed;
    computed["character_present"] = true;
    if (rep.ok()) {
      AlgebraMap j = identity_self_map(cb->data.S);
      std::size_t n = cb->data.S->dim;
      Matrix tr(b.field, n, n);
      for (std::size_t a = 0; a < n; ++a) {
        Vec col = trace_s(cb->data, j, unit_vec(b.field, n, a));
        for (std::size_t r = 0; r < n; ++r) tr.at(r, a) = col[r];
      }
      computed["trace"] = matrix_csv_json(b.field, tr);
      computed["witness"] = csv_or_null(b.field, trace_s_witness(cb->data, j));
    }
    return emit(out, path, "frobenius", rep, std::move(computed));
  }
  throw InvalidInput("expected a frobenius file, got kind \"" + b.kind + "\"");
}

Vec parse_element(const FieldSpec& f, const std::string& text, std::size_t expected) {
  Vec v;
  std::string part;
  std::istringstream stream(text);
  while (std::getline(stream, part, ',')) v.push_back(f.parse(part));
  if (v.size() != expected)
    throw InvalidInput("element needs " + std::to_string(expected) + " coordinates, got " +
                       std::to_string(v.size()));
  return v;
}

int cmd_trace(std::ostream& out, const std::string& path, const std::string& element) {
  BundleFile b = load_bundle(path);
  if (const auto* fb = std::get_if<FrobeniusSystemBundle>(&b.payload)) {
    FrobeniusSystem sys = fb->system();
    if (!sys.chi) throw InvalidInput("this system has no character; the trace is undefined");
    Vec v = parse_element(b.field, element, sys.ctx.J.dim);
    Report rep = verify_frobenius(sys);
    if (!rep.ok()) return emit(out, path, "trace", rep, ojson::object());
    ojson computed;
    computed["element"] = csv(b.field, v);
    computed["trace"] = csv(b.field, frobenius_trace(sys, v));
    return emit(out, path, "trace", rep, std::move(computed));
  }
  if (const auto* cb = std::get_if<FrobeniusAlgebraBundle>(&b.payload)) {
    Vec v = parse_element(b.field, element, cb->data.S->dim);
    Report rep = verify_frobenius_algebra(cb->data);
    if (!rep.ok()) return emit(out, path, "trace", rep, ojson::object());
    ojson computed;
    computed["element"] = csv(b.field, v);
    computed["trace"] = csv(b.field, trace_s(cb->data, identity_self_map(cb->data.S), v));
    return emit(out, path, "trace", rep, std::move(computed));
  }
  throw InvalidInput("expected a frobenius file, got kind \"" + b.kind + "\"");
}

int cmd_smash(std::ostream& out, const std::string& path, const std::string& out_path) {
  BundleFile b = load_bundle(path);
  const ModuleAlgebraAction& act = as_action(b).action;
  Report rep = check_module_algebra(act);
  if (!rep.ok()) return emit(out, path, "smash", rep, ojson::object());

  SmashFrobenius sf = smash_frobenius(act);
  rep.append_prefixed(verify_frobenius(sf.system), "system");
  if (!rep.ok()) return emit(out, path, "smash", rep, ojson::object());

  save_bundle(bundle_from_system(sf.system), out_path);
  ojson computed;
  computed["output"] = out_path;
  computed["smash_dim"] = sf.product.rc.ring.R->dim;
  computed["fixed_ring"] = subspace_json(sf.product.fixed_ring);
  return emit(out, path, "smash", rep, std::move(computed));
}

int cmd_coring_dual(std::ostream& out, const std::string& path, const std::string& out_path) {
  BundleFile b = load_bundle(path);
  const CoringBundle& cb = as_coring(b);
  if (!cb.grouplike) throw InvalidInput("the coring file carries no grouplike element");

  Report rep;
  rep.append_prefixed(check_algebra(*cb.A), "A");
  if (!rep.ok()) return emit(out, path, "coring-dual", rep, ojson::object());
  CoringPresentation c = cb.coring();
  rep.append(verify_coring(c));
  auto& g = rep.start("grouplike", "Delta(x) = x (x) x and eps(x) = 1");
  record(g, is_grouplike(c, *cb.grouplike), "x");
  if (!rep.ok()) return emit(out, path, "coring-dual", rep, ojson::object());

  DualRingResult dual = dual_ring(c, *cb.grouplike);
  rep.append_prefixed(verify_character(dual.rc), "dual");
  if (!rep.ok()) return emit(out, path, "coring-dual", rep, ojson::object());

  save_bundle(bundle_from_character_ring(dual.rc), out_path);
  ojson computed;
  computed["output"] = out_path;
  computed["dual_dim"] = dual.rc.ring.R->dim;
  computed["B"] = subspace_json(invariants(dual.rc).B);
  computed["coinvariants"] = subspace_json(coinvariants(c, *cb.grouplike));
  return emit(out, path, "coring-dual", rep, std::move(computed));
}

int cmd_fbn(std::ostream& out, const std::string& path) {
  BundleFile b = load_bundle(path);
  AlgebraPtr a = as_algebra(b).algebra;
  Report rep = check_algebra(*a);
  if (!rep.ok()) return emit(out, path, "fbn", rep, ojson::object());

  FiniteRingView view = finite_ring_view(a);
  FbnReport fr = is_right_fbn(view);
  ojson computed;
  computed["fbn"] = fr.fbn();
  computed["noetherian"] = fr.noetherian;
  computed["fully_bounded"] = fr.fully_bounded;
  computed["right_ideals"] = right_ideals(view).size();
  computed["two_sided_ideals"] = two_sided_ideals(view).size();
  ojson primes = ojson::array();
  for (const PrimeVerdict& v : fr.verdicts) {
    ojson entry;
    entry["basis"] = subspace_json(v.prime);
    entry["bounded"] = v.bounded;
    entry["failing_essential"] =
        v.failing_essential ? subspace_json(*v.failing_essential) : ojson(nullptr);
    primes.push_back(std::move(entry));
  }
  computed["primes"] = std::move(primes);
  return emit(out, path, "fbn", rep, std::move(computed));
}

int cmd_fbn_transfer(std::ostream& out, const std::string& path,
                     const std::optional<std::string>& frob_path) {
  BundleFile b = load_bundle(path);
  ARingWithCharacter rc = as_aring(b).character_ring();
  Report rep = verify_character(rc);
  if (!rep.ok()) return emit(out, path, "fbn-transfer", rep, ojson::object());

  std::optional<FrobeniusSystem> sys;
  if (frob_path) {
    BundleFile fb = load_bundle(*frob_path);
    const auto* fsb = std::get_if<FrobeniusSystemBundle>(&fb.payload);
    if (!fsb) throw InvalidInput("fbn-transfer needs a frobenius file in system form");
    sys = fsb->system();
    if (!(*sys->ring.A == *rc.ring.A) || !(*sys->ring.R == *rc.ring.R) ||
        !(sys->ring.i.matrix == rc.ring.i.matrix))
      throw InvalidInput("the frobenius system lives over a different ring than the aring file");
  }

  TransferConditions tc = fbn_transfer_report(rc, sys ? &*sys : nullptr);
  rep.append(tc.report);
  ojson computed;
  computed["condition1"] = tc.condition1();
  computed["condition2"] = tc.condition2();
  computed["condition3"] = tc.condition3();
  computed["a_fbn"] = tc.a_fbn.fbn();
  computed["r_fbn"] = tc.r_fbn.fbn();
  computed["b_fbn"] = tc.b_fbn.fbn();
  computed["quasi_projective"] = tc.quasi_projective;
  computed["frobenius_hypothesis"] = tc.frobenius_hypothesis;
  computed["witness"] = csv_or_null(b.field, tc.projective_witness);
  computed["fixed_subring_dim"] = tc.b->dim;
  return emit(out, path, "fbn-transfer", rep, std::move(computed));
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact structure-constant computations for algebras with characters"};
  app.require_subcommand(1);

  std::string file;
  std::string module_file;
  std::string frob_file;
  std::string out_file;
  std::string element;

  CLI::App* verify = app.add_subcommand("verify", "run the checker matching the file kind");
  verify->add_option("file", file, "bundle file")->required();

  CLI::App* inv = app.add_subcommand("invariants", "invariant subspaces of an aring");
  inv->add_option("file", file, "aring file")->required();
  inv->add_option("--module", module_file, "module file for the extra invariants");

  CLI::App* proj = app.add_subcommand("projective", "projectivity witness of an aring");
  proj->add_option("file", file, "aring file")->required();

  CLI::App* qp = app.add_subcommand("quasiprojective", "quasi-projectivity decision");
  qp->add_option("file", file, "aring file")->required();

  CLI::App* frob = app.add_subcommand("frobenius", "verify a system and compute its trace data");
  frob->add_option("file", file, "frobenius file")->required();

  CLI::App* trace = app.add_subcommand("trace", "trace of one element through a system");
  trace->add_option("file", file, "frobenius file")->required();
  trace->add_option("--element", element, "comma-separated coordinates")->required();

  CLI::App* smash_cmd = app.add_subcommand("smash", "build the smash-product system of an action");
  smash_cmd->add_option("file", file, "action file")->required();
  smash_cmd->add_option("-o,--output", out_file, "output frobenius file")->required();

  CLI::App* cdual = app.add_subcommand("coring-dual", "build the dual aring of a coring");
  cdual->add_option("file", file, "coring file")->required();
  cdual->add_option("-o,--output", out_file, "output aring file")->required();

  CLI::App* fbn_cmd = app.add_subcommand("fbn", "prime ideals and boundedness of a finite ring");
  fbn_cmd->add_option("file", file, "algebra file")->required();

  CLI::App* transfer = app.add_subcommand("fbn-transfer", "transfer conditions between A, R and B");
  transfer->add_option("file", file, "aring file")->required();
  transfer->add_option("--frobenius", frob_file, "frobenius system file over the same ring");

  std::vector<const char*> argv;
  argv.push_back("froblab");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(out, file);
    if (inv->parsed())
      return cmd_invariants(out, file,
                            inv->count("--module") ? std::optional<std::string>(module_file)
                                                   : std::nullopt);
    if (proj->parsed()) return cmd_projective(out, file);
    if (qp->parsed()) return cmd_quasiprojective(out, file);
    if (frob->parsed()) return cmd_frobenius(out, file);
    if (trace->parsed()) return cmd_trace(out, file, element);
    if (smash_cmd->parsed()) return cmd_smash(out, file, out_file);
    if (cdual->parsed()) return cmd_coring_dual(out, file, out_file);
    if (fbn_cmd->parsed()) return cmd_fbn(out, file);
    if (transfer->parsed())
      return cmd_fbn_transfer(out, file,
                              transfer->count("--frobenius")
                                  ? std::optional<std::string>(frob_file)
                                  : std::nullopt);
  } catch (const LoadError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const ScalarFormatError& e) {
    err << "scalar error: " << e.what() << "\n";
    return 2;
  } catch (const EnumerationLimit& e) {
    err << "enumeration limit: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  err << "usage error: no subcommand selected\n";
  return 2;
}

}  // namespace froblab
