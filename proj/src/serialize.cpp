/*
   Copyright 2026 The gl3rep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include "gl3/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gl3 {

Json to_json(const CycValue& v) {
    const CycValue c = v.canonical();
    if (auto n = c.rational_integer()) return *n;
    Json terms = Json::array();
    for (const auto& t : c.terms()) terms.push_back({t.exp, t.coeff});
    return Json{{"zeta", c.field()->modulus()}, {"den", c.denominator()}, {"terms", terms}};
}

Json to_json(const ClassLabel& l) {
    Json j{{"label", to_string(l)}, {"type", to_string(l.type)}};
    j["params"] = Json::array();
    for (auto p : l.params) j["params"].push_back(p);
    return j;
}

Json to_json(const ClassFunction& f, bool with_classes) {
    Json vals = Json::array();
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (with_classes)
            vals.push_back({{"class", to_string(f.classes()[i].label)}, {"value", to_json(f[i])}});
        else
            vals.push_back(to_json(f[i]));
    }
    return vals;
}

Json to_json(const IrrLabel& l) { return to_string(l); }

Json to_json(const SubgroupSpec& s) { return to_string(s); }

Json to_json(const Decomposition& d) {
    Json terms = Json::object();
    for (const auto& [l, m] : d.terms) terms[to_string(l)] = m;
    return Json{{"degree", d.degree}, {"genuine", d.genuine()}, {"multiplicities", terms}};
}

Json to_json(const Failure& f) {
    return Json{{"tuple", f.tuple}, {"detail", f.detail}, {"classes", f.classes}};
}

Json to_json(const VerifyReport& r) {
    Json j;
    j["case"] = r.name;
    j["q"] = r.q;
    j["sweep"] = r.sweep;
    j["tuple_space"] = r.tuple_space;
    j["tuples_checked"] = r.tuples_checked;
    j["excluded"] = r.excluded;
    j["failures"] = Json::array();
    for (const auto& f : r.failures) j["failures"].push_back(to_json(f));
    j["experimental_checked"] = r.experimental_checked;
    j["experimental"] = Json::array();
    for (const auto& f : r.experimental) j["experimental"].push_back(to_json(f));
    j["notes"] = r.notes;
    j["ok"] = r.ok();
    return j;
}

Json to_json(const UnipotentPattern& p) {
    Json z = Json::array();
    for (auto [i, k] : p.zeroed) z.push_back({i, k});
    return z;
}

Json to_json(const InterpolatingFamily& f) {
    Json packets = Json::array();
    for (const auto& packet : f.packets) {
        Json pk = Json::array();
        for (const auto& p : packet) pk.push_back(to_json(p));
        packets.push_back(pk);
    }
    return packets;
}

CycValue cyc_from_json(const Json& j, const CyclotomicField& field) {
    if (j.is_number_integer()) return CycValue(field, j.get<std::int64_t>());
    if (j.at("zeta").get<std::int64_t>() != field.modulus()) throw std::invalid_argument("value uses a different cyclotomic field");
    std::vector<CycValue::Term> terms;
    for (const auto& t : j.at("terms")) {
        const auto k = t.at(0).get<std::int64_t>();
        if (k < 0 || k >= field.modulus()) throw std::invalid_argument("root exponent out of range");
        terms.push_back({static_cast<std::uint32_t>(k), t.at(1).get<std::int64_t>()});
    }
    const auto den = j.at("den").get<std::int64_t>();
    if (den <= 0) throw std::invalid_argument("denominator must be positive");
    return CycValue::from_terms(field, std::move(terms), den);
}

SubgroupSpec subgroup_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("subgroup spec must be a JSON object");
    const auto name = j.at("kind").get<std::string>();
    const auto kind = subgroup_kind_from_string(name);
    if (!kind) throw std::invalid_argument("unknown subgroup kind '" + name + "'");
    const auto chars = j.value("chars", std::vector<std::int64_t>{});
    const std::size_t want = *kind == SubgroupKind::TorusI ? 3 : *kind == SubgroupKind::TorusM ? 2 : 1;
    if (chars.size() != want) throw std::invalid_argument("subgroup kind " + name + " needs " + std::to_string(want) + " character exponents");
    const int twist = j.value("twist", 1);
    if (twist < 0 || twist > 255) throw std::invalid_argument("twist out of range");
    const auto tw = static_cast<Elem>(twist);
    switch (*kind) {
        case SubgroupKind::TorusI: return SubgroupSpec::torus_i(chars[0], chars[1], chars[2]);
        case SubgroupKind::TorusM: return SubgroupSpec::torus_m(chars[0], chars[1]);
        case SubgroupKind::TorusA: return SubgroupSpec::torus_a(chars[0]);
        case SubgroupKind::ZN: return SubgroupSpec::zn(chars[0], tw);
        case SubgroupKind::ZN1: return SubgroupSpec::zn1(chars[0], tw);
        case SubgroupKind::ZNPattern: {
            std::vector<std::pair<int, int>> zeroed;
            for (const auto& pos : j.value("zeroed", Json::array())) zeroed.emplace_back(pos.at(0).get<int>(), pos.at(1).get<int>());
            return SubgroupSpec::pattern(chars[0], tw, zeroed);
        }
    }
    throw std::invalid_argument("unknown subgroup kind");
}

SubgroupSpec parse_subgroup(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\n");
    if (first != std::string::npos && text[first] == '{') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw std::invalid_argument(std::string("malformed spec JSON: ") + e.what());
        }
        try {
            return subgroup_from_json(j);
        } catch (const Json::exception& e) {
            throw std::invalid_argument(std::string("malformed spec JSON: ") + e.what());
        }
    }
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
    if (parts.empty()) throw std::invalid_argument("empty subgroup spec");
    const auto kind = subgroup_kind_from_string(parts[0]);
    if (!kind) throw std::invalid_argument("unknown subgroup kind '" + parts[0] + "'");
    auto num = [&](std::size_t i) -> std::int64_t {
        if (i >= parts.size()) throw std::invalid_argument("subgroup spec '" + text + "' has too few fields");
        std::size_t used = 0;
        const std::int64_t v = std::stoll(parts[i], &used);
        if (used != parts[i].size()) throw std::invalid_argument("bad number '" + parts[i] + "'");
        return v;
    };
    auto expect = [&](std::size_t n) {
        if (parts.size() != n) throw std::invalid_argument("subgroup spec '" + text + "' needs " + std::to_string(n - 1) + " fields");
    };
    switch (*kind) {
        case SubgroupKind::TorusI: expect(4); return SubgroupSpec::torus_i(num(1), num(2), num(3));
        case SubgroupKind::TorusM: expect(3); return SubgroupSpec::torus_m(num(1), num(2));
        case SubgroupKind::TorusA: expect(2); return SubgroupSpec::torus_a(num(1));
        case SubgroupKind::ZN: expect(3); return SubgroupSpec::zn(num(1), static_cast<Elem>(num(2)));
        case SubgroupKind::ZN1: expect(3); return SubgroupSpec::zn1(num(1), static_cast<Elem>(num(2)));
        case SubgroupKind::ZNPattern: {
            if (parts.size() != 3 && parts.size() != 4) throw std::invalid_argument("pattern spec needs alpha, twist and positions");
            std::vector<std::pair<int, int>> zeroed;
            if (parts.size() == 4) {
                std::stringstream ps(parts[3]);
                for (std::string pos; std::getline(ps, pos, ',');) {
                    if (pos.size() != 2) throw std::invalid_argument("position '" + pos + "' must be two digits such as 12");
                    zeroed.emplace_back(pos[0] - '0', pos[1] - '0');
                }
            }
            return SubgroupSpec::pattern(num(1), static_cast<Elem>(num(2)), zeroed);
        }
    }
    throw std::invalid_argument("unknown subgroup kind");
}

InterpolatingFamily family_from_json(const Json& j, int n) {
    if (!j.is_array()) throw std::invalid_argument("family must be a JSON array of packets");
    InterpolatingFamily f{n, {}};
    for (const auto& packet : j) {
        if (!packet.is_array()) throw std::invalid_argument("packet must be an array of patterns");
        std::vector<UnipotentPattern> pk;
        for (const auto& pattern : packet) {
            if (!pattern.is_array()) throw std::invalid_argument("pattern must be an array of positions");
            UnipotentPattern p{n, {}};
            for (const auto& pos : pattern) {
                if (!pos.is_array() || pos.size() != 2) throw std::invalid_argument("position must be [i, j]");
                p.zeroed.emplace_back(pos[0].get<int>(), pos[1].get<int>());
            }
            std::sort(p.zeroed.begin(), p.zeroed.end());
            pk.push_back(std::move(p));
        }
        f.packets.push_back(std::move(pk));
    }
    return f;
}

JsonHistogramStore::JsonHistogramStore(std::filesystem::path dir, int q, std::string fingerprint)
    : dir_(std::move(dir)), q_(q), fingerprint_(std::move(fingerprint)) {}

std::filesystem::path JsonHistogramStore::path(SubgroupKind kind) const {
    return dir_ / ("sweep-q" + std::to_string(q_) + "-" + to_string(kind) + ".json");
}

std::optional<SweepHistogram> JsonHistogramStore::load(SubgroupKind kind) {
    std::ifstream in(path(kind));
    if (!in) return std::nullopt;
    try {
        const Json j = Json::parse(in);
        if (j.at("schema_version").get<int>() != kSchemaVersion || j.at("tool_version").get<std::string>() != version() ||
            j.at("fingerprint").get<std::string>() != fingerprint_ || j.at("q").get<int>() != q_ ||
            j.at("kind").get<std::string>() != to_string(kind)) {
            ++rejected_;
            return std::nullopt;
        }
        SweepHistogram h;
        h.kind = kind;
        h.classes = j.at("classes").get<std::size_t>();
        h.bins = j.at("bins").get<std::size_t>();
        h.counts = j.at("counts").get<std::vector<std::int64_t>>();
        if (h.counts.size() != h.classes * h.bins) {
            ++rejected_;
            return std::nullopt;
        }
        return h;
    } catch (const std::exception&) {
        ++rejected_;
        return std::nullopt;
    }
}

void JsonHistogramStore::save(const SweepHistogram& h) {
    std::filesystem::create_directories(dir_);
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["tool_version"] = version();
    j["fingerprint"] = fingerprint_;
    j["q"] = q_;
    j["kind"] = to_string(h.kind);
    j["classes"] = h.classes;
    j["bins"] = h.bins;
    j["counts"] = h.counts;
    const auto target = path(h.kind);
    const auto tmp = std::filesystem::path(target.string() + ".tmp");
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
        out << j.dump();
    }
    std::filesystem::rename(tmp, target);
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace

InducedCache::InducedCache(std::filesystem::path dir, const Context& ctx) : dir_(std::move(dir)), ctx_(&ctx) {}

std::filesystem::path InducedCache::path(const SubgroupSpec& spec) const {
    std::ostringstream os;
    os << "induce-q" << ctx_->q() << '-' << std::hex << fnv1a(to_string(spec)) << ".json";
    return dir_ / os.str();
}

std::optional<ClassFunction> InducedCache::load(const SubgroupSpec& spec) {
    std::ifstream in(path(spec));
    if (!in) return std::nullopt;
    try {
        const Json j = Json::parse(in);
        if (j.at("schema_version").get<int>() != kSchemaVersion || j.at("tool_version").get<std::string>() != version() ||
            j.at("fingerprint").get<std::string>() != ctx_->tower().fingerprint() || j.at("q").get<int>() != ctx_->q() ||
            j.at("spec").get<std::string>() != to_string(spec) || j.at("values").size() != ctx_->classes().size()) {
            ++rejected_;
            return std::nullopt;
        }
        std::vector<CycValue> values;
        for (const auto& v : j.at("values")) values.push_back(cyc_from_json(v, ctx_->field()));
        return ClassFunction(ctx_->classes(), ctx_->field(), std::move(values));
    } catch (const std::exception&) {
        ++rejected_;
        return std::nullopt;
    }
}

void InducedCache::save(const SubgroupSpec& spec, const ClassFunction& f) {
    std::filesystem::create_directories(dir_);
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["tool_version"] = version();
    j["fingerprint"] = ctx_->tower().fingerprint();
    j["q"] = ctx_->q();
    j["spec"] = to_string(spec);
    j["values"] = to_json(f);
    const auto target = path(spec);
    const auto tmp = std::filesystem::path(target.string() + ".tmp");
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
        out << j.dump();
    }
    std::filesystem::rename(tmp, target);
}

}  // namespace gl3
