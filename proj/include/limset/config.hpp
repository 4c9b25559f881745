#pragma once

#include <set>
#include <string>
#include <vector>

#include "limset/poly.hpp"

namespace limset {

// Number literal: decimal, scientific, or a rational p/q.
double parse_number(const std::string& text);

// Polynomial in t: terms joined by +/-, each "coef", "coef t^k", "t^k/den"
// and the obvious variations ("2t", "1/3*t", "t/10", "-t^2").  Degree <= 8.
Poly parse_poly(const std::string& text);

// Minimal INI-style configuration: '#' or ';' comment lines, [section]
// headers, key = value pairs.  Keys are tracked so that unknown ones can be
// rejected after the experiment has consumed what it understands.
class ConfigFile {
public:
    static ConfigFile parse_file(const std::string& path);
    static ConfigFile parse_text(const std::string& text, const std::string& display_name);

    const std::string& raw_text() const { return raw_; }
    const std::string& display_name() const { return name_; }

    bool has_section(const std::string& section) const;
    bool has(const std::string& section, const std::string& key) const;

    std::string get_string(const std::string& section, const std::string& key);
    std::string get_string_or(const std::string& section, const std::string& key,
                              const std::string& fallback);
    double get_number(const std::string& section, const std::string& key);
    double get_number_or(const std::string& section, const std::string& key, double fallback);
    int get_int(const std::string& section, const std::string& key);
    int get_int_or(const std::string& section, const std::string& key, int fallback);
    std::vector<double> get_number_list(const std::string& section, const std::string& key);
    std::vector<int> get_int_list(const std::string& section, const std::string& key);
    Poly get_poly(const std::string& section, const std::string& key);
    std::vector<Poly> get_poly_list(const std::string& section, const std::string& key);

    // ConfigError naming any key that was never consumed (typo guard).
    void require_all_consumed() const;

private:
    struct Entry {
        std::string section;
        std::string key;
        std::string value;
    };
    std::string raw_;
    std::string name_;
    std::vector<Entry> entries_;
    std::set<std::string> sections_;
    std::set<std::string> consumed_;

    const Entry* find(const std::string& section, const std::string& key) const;
    std::string fetch(const std::string& section, const std::string& key);
};

} // namespace limset
