#pragma once

#include <string>
#include <vector>

#include "qpmut/decorated_rep.hpp"
#include "qpmut/seed.hpp"

namespace qpmut {

// Canonical text form: terms in descending lexicographic exponent order,
// "x2 + 1" style, variables printed as <stem><index>. parse(print(v)) == v.
std::string print_canonical(const LaurentPoly& p, const std::string& stem = "x");
std::string print_canonical(const RationalFunction& f, const std::string& stem = "x");
// Tropical monomials print their generators as u_{offset+1}..; "1" if neutral.
std::string print_canonical(const TropicalElement& t, int offset = 0);

// Grammar: integer literals, variables x<k> / u<k> (both meaning variable k),
// + - * / ^ with ^ taking a signed integer, parentheses. Throws parse_error
// with a byte offset on syntax errors and domain_error on division by zero.
RationalFunction parse_rational_function(const std::string& s, int nvars);

// JSON serialization. Every object carries "schema_version"; unknown fields
// are rejected with the offending path. Numbers travel as exact "p/q" strings.
std::string quiver_to_json(const IceQuiver& q);
IceQuiver quiver_from_json(const std::string& text);

std::string seed_to_json(const Seed& s);
Seed seed_from_json(const std::string& text);

std::string qp_to_json(const QP& qp);
QP qp_from_json(const std::string& text);

std::string rep_to_json(const DecoratedRep& m);
DecoratedRep rep_from_json(const std::string& text);

struct Config {
    int truncation_degree = 12;
    std::vector<long> primes;           // empty: choose automatically
    std::size_t max_seeds = 10000;
    std::size_t max_terms = 1000000;
    int iso_draws = 5;
    unsigned long iso_seed = 12345;

    void validate() const;
};

Config config_from_json(const std::string& text);
// Reads the file named by QPMUT_CONFIG if set; defaults otherwise.
Config load_config_from_env();

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace qpmut
