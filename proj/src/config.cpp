#include "limset/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "limset/errors.hpp"

namespace limset {

namespace {

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

double parse_plain_double(const std::string& text, const std::string& context) {
    const std::string t = trim(text);
    if (t.empty()) throw ConfigError("empty number in " + context);
    const char* begin = t.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end != begin + t.size())
        throw ConfigError("malformed number '" + t + "' in " + context);
    if (!std::isfinite(v))
        throw ConfigError("non-finite number '" + t + "' in " + context);
    return v;
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> items;
    std::string cur;
    for (char c : value) {
        if (c == ',') {
            items.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    items.push_back(cur);
    return items;
}

// Splits on top-level +/- signs; a sign directly after e/E or an operator is
// part of the number ("1e-3").
std::vector<std::string> split_terms(const std::string& text) {
    std::vector<std::string> terms;
    std::string cur;
    char prev = 0;
    for (char c : text) {
        if ((c == '+' || c == '-') && !cur.empty() && prev != 0 &&
            std::string("eE^*/+-").find(prev) == std::string::npos) {
            terms.push_back(cur);
            cur.clear();
        }
        cur.push_back(c);
        if (!std::isspace(static_cast<unsigned char>(c))) prev = c;
    }
    if (!cur.empty()) terms.push_back(cur);
    return terms;
}

} // namespace

double parse_number(const std::string& text) {
    const std::string t = trim(text);
    const size_t slash = t.find('/');
    if (slash == std::string::npos) return parse_plain_double(t, "'" + t + "'");
    if (t.find('/', slash + 1) != std::string::npos)
        throw ConfigError("malformed rational '" + t + "'");
    const double num = parse_plain_double(t.substr(0, slash), "'" + t + "'");
    const double den = parse_plain_double(t.substr(slash + 1), "'" + t + "'");
    if (den == 0.0) throw ConfigError("zero denominator in '" + t + "'");
    return num / den;
}

Poly parse_poly(const std::string& text) {
    const std::string flat = strip_spaces(text);
    if (flat.empty()) throw ConfigError("empty polynomial");
    std::vector<double> coeffs(9, 0.0);
    for (const std::string& raw : split_terms(flat)) {
        std::string term = raw;
        double sign = 1.0;
        while (!term.empty() && (term[0] == '+' || term[0] == '-')) {
            if (term[0] == '-') sign = -sign;
            term.erase(term.begin());
        }
        if (term.empty()) throw ConfigError("dangling sign in polynomial '" + text + "'");
        const size_t tpos = term.find('t');
        if (tpos == std::string::npos) {
            coeffs[0] += sign * parse_number(term);
            continue;
        }
        if (term.find('t', tpos + 1) != std::string::npos)
            throw ConfigError("malformed term '" + raw + "' in polynomial '" + text + "'");
        std::string prefix = term.substr(0, tpos);
        std::string suffix = term.substr(tpos + 1);
        double coef = 1.0;
        if (!prefix.empty()) {
            if (prefix.back() == '*') prefix.pop_back();
            if (!prefix.empty()) coef = parse_number(prefix);
        }
        int power = 1;
        if (!suffix.empty() && suffix[0] == '^') {
            size_t i = 1;
            while (i < suffix.size() && std::isdigit(static_cast<unsigned char>(suffix[i]))) ++i;
            if (i == 1)
                throw ConfigError("malformed exponent in term '" + raw + "'");
            power = std::atoi(suffix.substr(1, i - 1).c_str());
            suffix = suffix.substr(i);
        }
        if (!suffix.empty()) {
            if (suffix[0] != '/')
                throw ConfigError("malformed term '" + raw + "' in polynomial '" + text + "'");
            const double den = parse_plain_double(suffix.substr(1), "term '" + raw + "'");
            if (den == 0.0) throw ConfigError("zero denominator in term '" + raw + "'");
            coef /= den;
        }
        if (power < 0 || power > 8)
            throw ConfigError("polynomial degree out of range in '" + text + "'");
        coeffs[static_cast<size_t>(power)] += sign * coef;
    }
    return Poly(coeffs);
}

ConfigFile ConfigFile::parse_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str(), path);
}

ConfigFile ConfigFile::parse_text(const std::string& text, const std::string& display_name) {
    ConfigFile cfg;
    cfg.raw_ = text;
    cfg.name_ = display_name;
    cfg.sections_.insert("");
    std::string section;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        const std::string where = display_name + ":" + std::to_string(lineno);
        if (t[0] == '[') {
            if (t.back() != ']')
                throw ConfigError("unterminated section header at " + where);
            section = trim(t.substr(1, t.size() - 2));
            if (section.empty())
                throw ConfigError("empty section name at " + where);
            if (!cfg.sections_.insert(section).second)
                throw ConfigError("duplicate section [" + section + "] at " + where);
            continue;
        }
        const size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected 'key = value' at " + where);
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key.empty()) throw ConfigError("empty key at " + where);
        if (value.empty()) throw ConfigError("empty value for '" + key + "' at " + where);
        for (char c : key)
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-')
                throw ConfigError("bad character in key '" + key + "' at " + where);
        if (cfg.find(section, key) != nullptr)
            throw ConfigError("duplicate key '" + key + "' in section [" + section + "] at " + where);
        cfg.entries_.push_back({section, key, value});
    }
    return cfg;
}

const ConfigFile::Entry* ConfigFile::find(const std::string& section, const std::string& key) const {
    for (const Entry& e : entries_)
        if (e.section == section && e.key == key) return &e;
    return nullptr;
}

bool ConfigFile::has_section(const std::string& section) const {
    for (const Entry& e : entries_)
        if (e.section == section) return true;
    return sections_.count(section) > 0 && !section.empty();
}

bool ConfigFile::has(const std::string& section, const std::string& key) const {
    return find(section, key) != nullptr;
}

std::string ConfigFile::fetch(const std::string& section, const std::string& key) {
    const Entry* e = find(section, key);
    if (e == nullptr) {
        const std::string loc = section.empty() ? "top level" : "section [" + section + "]";
        throw ConfigError("missing key '" + key + "' at " + loc + " in " + name_);
    }
    consumed_.insert(section + "\n" + key);
    return e->value;
}

std::string ConfigFile::get_string(const std::string& section, const std::string& key) {
    return fetch(section, key);
}

std::string ConfigFile::get_string_or(const std::string& section, const std::string& key,
                                      const std::string& fallback) {
    if (!has(section, key)) return fallback;
    return fetch(section, key);
}

double ConfigFile::get_number(const std::string& section, const std::string& key) {
    const std::string v = fetch(section, key);
    try {
        return parse_number(v);
    } catch (const ConfigError& err) {
        throw ConfigError(std::string(err.what()) + " (key '" + key + "')");
    }
}

double ConfigFile::get_number_or(const std::string& section, const std::string& key, double fallback) {
    if (!has(section, key)) return fallback;
    return get_number(section, key);
}

int ConfigFile::get_int(const std::string& section, const std::string& key) {
    const double v = get_number(section, key);
    const double r = std::round(v);
    if (std::abs(v - r) > 1e-9 || std::abs(r) > 2e9)
        throw ConfigError("key '" + key + "' must be an integer, got '" +
                          fetch(section, key) + "'");
    return static_cast<int>(r);
}

int ConfigFile::get_int_or(const std::string& section, const std::string& key, int fallback) {
    if (!has(section, key)) return fallback;
    return get_int(section, key);
}

std::vector<double> ConfigFile::get_number_list(const std::string& section, const std::string& key) {
    std::vector<double> out;
    for (const std::string& item : split_list(fetch(section, key))) {
        if (trim(item).empty())
            throw ConfigError("empty item in list '" + key + "'");
        out.push_back(parse_number(item));
    }
    return out;
}

std::vector<int> ConfigFile::get_int_list(const std::string& section, const std::string& key) {
    std::vector<int> out;
    for (double v : get_number_list(section, key)) {
        const double r = std::round(v);
        if (std::abs(v - r) > 1e-9 || std::abs(r) > 2e9)
            throw ConfigError("list '" + key + "' must contain integers");
        out.push_back(static_cast<int>(r));
    }
    return out;
}

Poly ConfigFile::get_poly(const std::string& section, const std::string& key) {
    try {
        return parse_poly(fetch(section, key));
    } catch (const ConfigError& err) {
        throw ConfigError(std::string(err.what()) + " (key '" + key + "')");
    }
}

std::vector<Poly> ConfigFile::get_poly_list(const std::string& section, const std::string& key) {
    std::vector<Poly> out;
    for (const std::string& item : split_list(fetch(section, key))) {
        if (trim(item).empty())
            throw ConfigError("empty item in list '" + key + "'");
        try {
            out.push_back(parse_poly(item));
        } catch (const ConfigError& err) {
            throw ConfigError(std::string(err.what()) + " (key '" + key + "')");
        }
    }
    return out;
}

void ConfigFile::require_all_consumed() const {
    std::vector<std::string> unknown;
    for (const Entry& e : entries_)
        if (consumed_.count(e.section + "\n" + e.key) == 0)
            unknown.push_back(e.section.empty() ? e.key : e.section + "." + e.key);
    if (unknown.empty()) return;
    std::string msg = "unrecognized config keys in " + name_ + ":";
    for (const std::string& k : unknown) msg += " " + k;
    throw ConfigError(msg);
}

} // namespace limset
