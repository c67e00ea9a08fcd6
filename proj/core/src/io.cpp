#include "qpmut/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qpmut {

using nlohmann::json;

namespace {

std::string monomial_string(const std::vector<int>& e, const std::string& stem) {
    std::string s;
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (!s.empty()) s += "*";
        s += stem + std::to_string(k + 1);
        if (e[k] != 1) s += "^" + std::to_string(e[k]);
    }
    return s;
}

}  // namespace

std::string print_canonical(const LaurentPoly& p, const std::string& stem) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const Rational& c = it->second;
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono = monomial_string(it->first, stem);
        if (mono.empty()) {
            out += rational_to_string(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += rational_to_string(mag) + "*" + mono;
        }
    }
    return out;
}

std::string print_canonical(const RationalFunction& f, const std::string& stem) {
    LaurentPoly one = LaurentPoly::constant(f.nvars(), Rational(1));
    if (f.den() == one) return print_canonical(f.num(), stem);
    return "(" + print_canonical(f.num(), stem) + ")/(" + print_canonical(f.den(), stem) + ")";
}

std::string print_canonical(const TropicalElement& t, int offset) {
    std::string s;
    for (int k = 0; k < t.size(); ++k) {
        if (t.exponents[k] == 0) continue;
        if (!s.empty()) s += "*";
        s += "u" + std::to_string(offset + k + 1);
        if (t.exponents[k] != 1) s += "^" + std::to_string(t.exponents[k]);
    }
    return s.empty() ? "1" : s;
}

namespace {

// Recursive-descent parser over RationalFunction values.
class RfParser {
public:
    RfParser(const std::string& s, int nvars) : s_(s), nvars_(nvars) {}

    RationalFunction parse() {
        RationalFunction v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw parse_error("syntax error at byte " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    RationalFunction expr() {
        RationalFunction v = term();
        while (true) {
            if (eat('+')) {
                v = v + term();
            } else if (eat('-')) {
                v = v - term();
            } else {
                return v;
            }
        }
    }

    RationalFunction term() {
        RationalFunction v = factor();
        while (true) {
            if (eat('*')) {
                v = v * factor();
            } else if (eat('/')) {
                RationalFunction d = factor();
                if (d.is_zero()) throw domain_error("division by zero polynomial");
                v = v / d;
            } else {
                return v;
            }
        }
    }

    RationalFunction factor() {
        bool neg = false;
        while (eat('-')) neg = !neg;
        RationalFunction v = atom();
        if (eat('^')) {
            long k = signed_int();
            if (k < 0 && v.is_zero()) throw domain_error("zero raised to a negative power");
            v = v.pow(k);
        }
        return neg ? -v : v;
    }

    RationalFunction atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            RationalFunction v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (c == 'x' || c == 'u') {
            ++pos_;
            long k = digits();
            if (k < 1 || k > nvars_) fail("variable index out of range");
            return RationalFunction::variable(nvars_, static_cast<int>(k));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return RationalFunction::constant(nvars_, Rational(digits()));
        }
        fail("expected a literal, variable, or '('");
    }

    long signed_int() {
        skip_ws();
        bool neg = eat('-');
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
        long v = digits();
        return neg ? -v : v;
    }

    long digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected digits");
        try {
            return std::stol(s_.substr(start, pos_ - start));
        } catch (const std::out_of_range&) {
            fail("integer literal too large");
        }
    }

    const std::string& s_;
    int nvars_;
    std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational_function(const std::string& s, int nvars) {
    return RfParser(s, nvars).parse();
}

namespace {

constexpr int kSchemaVersion = 1;

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw parse_error("invalid JSON");
    return j;
}

void check_object(const json& j, const std::string& path,
                  const std::vector<std::string>& required,
                  const std::vector<std::string>& optional = {}) {
    if (!j.is_object()) throw parse_error(path + ": expected an object");
    for (const std::string& k : required) {
        if (!j.contains(k)) throw parse_error(path + ": missing field '" + k + "'");
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& k = it.key();
        bool known = std::find(required.begin(), required.end(), k) != required.end() ||
                     std::find(optional.begin(), optional.end(), k) != optional.end();
        if (!known) throw parse_error(path + ": unknown field '" + k + "'");
    }
}

void check_version(const json& j, const std::string& path) {
    if (!j.at("schema_version").is_number_integer() ||
        j.at("schema_version").get<int>() != kSchemaVersion) {
        throw parse_error(path + ": unsupported schema_version");
    }
}

int get_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) throw parse_error(path + ": expected an integer");
    return j.get<int>();
}

std::string get_string(const json& j, const std::string& path) {
    if (!j.is_string()) throw parse_error(path + ": expected a string");
    return j.get<std::string>();
}

json quiver_to_obj(const IceQuiver& q) {
    json arrows = json::array();
    for (const Arrow& a : q.arrows()) {
        arrows.push_back({{"id", a.id}, {"src", a.src}, {"tgt", a.tgt}});
    }
    return {{"schema_version", kSchemaVersion}, {"n", q.n()}, {"r", q.r()}, {"arrows", arrows}};
}

IceQuiver quiver_from_obj(const json& j, const std::string& path) {
    check_object(j, path, {"schema_version", "n", "r", "arrows"});
    check_version(j, path);
    int n = get_int(j.at("n"), path + ".n");
    int r = get_int(j.at("r"), path + ".r");
    if (!j.at("arrows").is_array()) throw parse_error(path + ".arrows: expected an array");
    std::vector<Arrow> arrows;
    int k = 0;
    for (const json& aj : j.at("arrows")) {
        std::string p = path + ".arrows[" + std::to_string(k++) + "]";
        check_object(aj, p, {"id", "src", "tgt"});
        arrows.push_back({get_string(aj.at("id"), p + ".id"), get_int(aj.at("src"), p + ".src"),
                          get_int(aj.at("tgt"), p + ".tgt")});
    }
    return IceQuiver(n, r, std::move(arrows));
}

json qp_to_obj(const QP& qp) {
    json terms = json::array();
    for (const auto& [cyc, c] : qp.w.terms()) {
        terms.push_back({{"cycle", cyc}, {"coeff", rational_to_string(c)}});
    }
    return {{"schema_version", kSchemaVersion},
            {"quiver", quiver_to_obj(qp.quiver)},
            {"truncation_degree", qp.truncation_degree},
            {"potential", terms}};
}

QP qp_from_obj(const json& j, const std::string& path) {
    check_object(j, path, {"schema_version", "quiver", "truncation_degree", "potential"});
    check_version(j, path);
    IceQuiver q = quiver_from_obj(j.at("quiver"), path + ".quiver");
    int trunc = get_int(j.at("truncation_degree"), path + ".truncation_degree");
    if (trunc < 3) throw parse_error(path + ".truncation_degree: must be at least 3");
    QP qp = QP::make(q, trunc);
    if (!j.at("potential").is_array()) throw parse_error(path + ".potential: expected an array");
    int k = 0;
    for (const json& tj : j.at("potential")) {
        std::string p = path + ".potential[" + std::to_string(k++) + "]";
        check_object(tj, p, {"cycle", "coeff"});
        if (!tj.at("cycle").is_array()) throw parse_error(p + ".cycle: expected an array");
        PathWord w;
        for (const json& id : tj.at("cycle")) w.push_back(get_string(id, p + ".cycle[]"));
        qp.w.add_cycle(w, rational_from_string(get_string(tj.at("coeff"), p + ".coeff")));
    }
    return qp;
}

json matrix_to_obj(const QMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_string(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

QMatrix matrix_from_obj(const json& j, std::size_t rows, std::size_t cols,
                        const std::string& path) {
    if (!j.is_array() || j.size() != rows) {
        throw parse_error(path + ": expected " + std::to_string(rows) + " rows");
    }
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) {
            throw parse_error(path + ": expected " + std::to_string(cols) + " columns");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            m.at(i, c) = rational_from_string(get_string(j[i][c], path));
        }
    }
    return m;
}

}  // namespace

std::string quiver_to_json(const IceQuiver& q) { return quiver_to_obj(q).dump(2); }

IceQuiver quiver_from_json(const std::string& text) {
    return quiver_from_obj(parse_json(text), "quiver");
}

std::string seed_to_json(const Seed& s) {
    json cluster = json::array();
    for (const RationalFunction& v : s.cluster) cluster.push_back(print_canonical(v));
    json j = {{"schema_version", kSchemaVersion},
              {"quiver", quiver_to_obj(s.quiver)},
              {"cluster", cluster}};
    return j.dump(2);
}

Seed seed_from_json(const std::string& text) {
    json j = parse_json(text);
    check_object(j, "seed", {"schema_version", "quiver", "cluster"});
    check_version(j, "seed");
    Seed s;
    s.quiver = quiver_from_obj(j.at("quiver"), "seed.quiver");
    if (!j.at("cluster").is_array() ||
        static_cast<int>(j.at("cluster").size()) != s.quiver.r()) {
        throw parse_error("seed.cluster: expected r entries");
    }
    for (const json& vj : j.at("cluster")) {
        s.cluster.push_back(
            parse_rational_function(get_string(vj, "seed.cluster[]"), s.quiver.n()));
    }
    return s;
}

std::string qp_to_json(const QP& qp) { return qp_to_obj(qp).dump(2); }

QP qp_from_json(const std::string& text) { return qp_from_obj(parse_json(text), "qp"); }

std::string rep_to_json(const DecoratedRep& m) {
    json maps = json::object();
    for (const auto& [id, mat] : m.maps) maps[id] = matrix_to_obj(mat);
    json j = {{"schema_version", kSchemaVersion},
              {"qp", qp_to_obj(m.qp)},
              {"dims", m.dims},
              {"vdims", m.vdims},
              {"maps", maps}};
    return j.dump(2);
}

DecoratedRep rep_from_json(const std::string& text) {
    json j = parse_json(text);
    check_object(j, "rep", {"schema_version", "qp", "dims", "vdims", "maps"});
    check_version(j, "rep");
    DecoratedRep m;
    m.qp = qp_from_obj(j.at("qp"), "rep.qp");
    const int n = m.qp.quiver.n();
    auto read_dims = [&](const json& dj, const std::string& path) {
        if (!dj.is_array() || static_cast<int>(dj.size()) != n) {
            throw parse_error(path + ": expected n entries");
        }
        std::vector<int> d;
        for (const json& e : dj) d.push_back(get_int(e, path));
        return d;
    };
    m.dims = read_dims(j.at("dims"), "rep.dims");
    m.vdims = read_dims(j.at("vdims"), "rep.vdims");
    if (!j.at("maps").is_object()) throw parse_error("rep.maps: expected an object");
    for (auto it = j.at("maps").begin(); it != j.at("maps").end(); ++it) {
        if (!m.qp.quiver.has_arrow(it.key())) {
            throw parse_error("rep.maps: unknown arrow '" + it.key() + "'");
        }
        const Arrow& a = m.qp.quiver.arrow(it.key());
        m.maps.emplace(it.key(), matrix_from_obj(it.value(), m.dims[a.src - 1],
                                                 m.dims[a.tgt - 1], "rep.maps." + it.key()));
    }
    m.validate();
    return m;
}

void Config::validate() const {
    if (truncation_degree < 3) throw input_error("truncation_degree must be at least 3");
    if (max_seeds == 0 || max_terms == 0) throw input_error("exploration caps must be positive");
    if (iso_draws < 1) throw input_error("iso_draws must be positive");
}

Config config_from_json(const std::string& text) {
    json j = parse_json(text);
    check_object(j, "config", {"schema_version"},
                 {"truncation_degree", "primes", "max_seeds", "max_terms", "iso_draws",
                  "iso_seed"});
    check_version(j, "config");
    Config c;
    if (j.contains("truncation_degree")) {
        c.truncation_degree = get_int(j.at("truncation_degree"), "config.truncation_degree");
    }
    if (j.contains("primes")) {
        if (!j.at("primes").is_array()) throw parse_error("config.primes: expected an array");
        for (const json& p : j.at("primes")) {
            c.primes.push_back(get_int(p, "config.primes[]"));
        }
    }
    if (j.contains("max_seeds")) c.max_seeds = get_int(j.at("max_seeds"), "config.max_seeds");
    if (j.contains("max_terms")) c.max_terms = get_int(j.at("max_terms"), "config.max_terms");
    if (j.contains("iso_draws")) c.iso_draws = get_int(j.at("iso_draws"), "config.iso_draws");
    if (j.contains("iso_seed")) {
        c.iso_seed = static_cast<unsigned long>(get_int(j.at("iso_seed"), "config.iso_seed"));
    }
    c.validate();
    return c;
}

Config load_config_from_env() {
    const char* path = std::getenv("QPMUT_CONFIG");
    if (!path) return Config{};
    return config_from_json(read_file(path));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot open file for writing: " + path);
    out << content;
    if (!out.good()) throw input_error("failed writing file: " + path);
}

}  // namespace qpmut
