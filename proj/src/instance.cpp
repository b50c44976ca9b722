/*
   Copyright 2026 The primequot Authors

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

#include "primequot/instance.hpp"

#include <algorithm>

namespace primequot {

namespace {

const Json& need(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw InstanceError(where, std::string("missing field \"") + key + "\"");
    return j.at(key);
}

template <class T>
T get_as(const Json& j, const std::string& where) {
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw InstanceError(where, e.what());
    }
}

Perm perm_at(const Json& j, std::size_t degree, const std::string& where) {
    Perm p = get_as<Perm>(j, where);
    if (p.size() != degree) throw InstanceError(where, "permutation has the wrong length");
    std::vector<bool> seen(degree, false);
    for (auto v : p) {
        if (v >= degree || seen[v]) throw InstanceError(where, "not a permutation");
        seen[v] = true;
    }
    return p;
}

void check_subgroup_json(const Json& j, const std::string& where) {
    if (!j.is_object()) throw InstanceError(where, "subgroup must be an object");
    const int forms = j.contains("elements") + j.contains("generator_indices") + j.contains("permutations");
    if (forms != 1) throw InstanceError(where, "give exactly one of elements, generator_indices, permutations");
}

Subgroup resolve_subgroup(const FiniteGroup& g, const Json& j, const std::string& where) {
    std::vector<GIdx> gens;
    if (j.contains("elements")) {
        auto el = get_as<std::vector<GIdx>>(j.at("elements"), where + "/elements");
        for (auto x : el)
            if (x >= g.order()) throw InstanceError(where + "/elements", "element index out of range");
        std::sort(el.begin(), el.end());
        el.erase(std::unique(el.begin(), el.end()), el.end());
        if (!is_subgroup(g, el)) throw InstanceError(where + "/elements", "not a subgroup");
        return Subgroup{el};
    }
    if (j.contains("generator_indices")) {
        gens = get_as<std::vector<GIdx>>(j.at("generator_indices"), where + "/generator_indices");
        for (auto x : gens)
            if (x >= g.order()) throw InstanceError(where + "/generator_indices", "element index out of range");
    } else {
        const Json& ps = j.at("permutations");
        if (g.perms().empty()) throw InstanceError(where, "group was not given by permutations");
        for (std::size_t i = 0; i < ps.size(); ++i) {
            const std::string w = where + "/permutations/" + std::to_string(i);
            const Perm p = perm_at(ps[i], g.perms().front().size(), w);
            auto it = std::find(g.perms().begin(), g.perms().end(), p);
            if (it == g.perms().end()) throw InstanceError(w, "permutation is not in the group");
            gens.push_back(static_cast<GIdx>(it - g.perms().begin()));
        }
    }
    return generate_subgroup(g, gens);
}

Json perms_json(const std::vector<Perm>& ps) {
    Json a = Json::array();
    for (const auto& p : ps) a.push_back(p);
    return a;
}

}  // namespace

Perm matrix_perm(std::uint32_t p, const std::vector<std::uint32_t>& m) {
    const std::uint32_t n = p * p - 1;
    Perm out(n);
    for (std::uint32_t v = 1; v <= n; ++v) {
        const std::uint32_t x = v % p, y = v / p;
        const std::uint32_t nx = (m[0] * x + m[1] * y) % p, ny = (m[2] * x + m[3] * y) % p;
        out[v - 1] = nx + p * ny - 1;
    }
    return out;
}

InstanceSpec parse_instance(const Json& j) {
    if (!j.is_object()) throw InstanceError("/", "instance must be a JSON object");
    InstanceSpec s;
    s.raw = j;
    s.name = j.contains("name") ? get_as<std::string>(j.at("name"), "/name") : std::string("instance");
    s.group = need(j, "group", "/");
    if (s.group.contains("cayley")) {
        get_as<std::vector<std::vector<GIdx>>>(s.group.at("cayley"), "/group/cayley");
    } else {
        const auto degree = get_as<std::size_t>(need(s.group, "degree", "/group"), "/group/degree");
        const Json& gens = need(s.group, "generators", "/group");
        if (!gens.is_array()) throw InstanceError("/group/generators", "must be an array");
        for (std::size_t i = 0; i < gens.size(); ++i) perm_at(gens[i], degree, "/group/generators/" + std::to_string(i));
    }
    s.D = need(j, "D", "/");
    check_subgroup_json(s.D, "/D");
    if (j.contains("H")) {
        s.H = j.at("H");
        check_subgroup_json(*s.H, "/H");
    }
    const Json& f = need(j, "field", "/");
    s.field.p = get_as<std::uint32_t>(need(f, "p", "/field"), "/field/p");
    s.field.n = f.contains("n") ? get_as<std::uint32_t>(f.at("n"), "/field/n") : 1;
    if (!is_prime(s.field.p)) throw InstanceError("/field/p", "not a prime");
    if (s.field.n == 0) throw InstanceError("/field/n", "must be positive");
    if (j.contains("selector")) {
        const Json& sel = j.at("selector");
        if (sel.is_string()) {
            if (sel.get<std::string>() != "invariant-block") throw InstanceError("/selector", "unknown selector");
            s.selector.invariant_block = true;
        } else {
            s.selector.invariant_block = false;
            s.selector.index = get_as<std::size_t>(need(sel, "index", "/selector"), "/selector/index");
        }
    }
    if (j.contains("seed")) s.seed = get_as<std::uint64_t>(j.at("seed"), "/seed");
    if (j.contains("expect")) {
        s.expect = get_as<std::string>(j.at("expect"), "/expect");
        if (s.expect != "galois-obstruction") throw InstanceError("/expect", "unknown expectation");
    }
    return s;
}

InstanceSpec parse_instance_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InstanceError("byte " + std::to_string(e.byte), e.what());
    }
    return parse_instance(j);
}

Instance resolve(const InstanceSpec& spec) {
    Instance in;
    in.spec = spec;
    try {
        if (spec.group.contains("cayley")) {
            in.gamma = FiniteGroup::from_cayley(spec.group.at("cayley").get<std::vector<std::vector<GIdx>>>());
        } else {
            std::vector<Perm> gens;
            for (const auto& g : spec.group.at("generators")) gens.push_back(g.get<Perm>());
            in.gamma = FiniteGroup::from_permutations(spec.group.at("degree").get<std::size_t>(), gens);
        }
    } catch (const GroupError& e) {
        throw InstanceError("/group", e.what());
    }
    in.D = resolve_subgroup(in.gamma, spec.D, "/D");
    in.H = spec.H ? resolve_subgroup(in.gamma, *spec.H, "/H") : whole_group(in.gamma);
    try {
        in.k = Field::make(spec.field.p, spec.field.n);
    } catch (const FieldError& e) {
        throw InstanceError("/field", e.what());
    }
    return in;
}

Json to_json(const InstanceSpec& spec) { return spec.raw; }

const std::vector<std::string>& corpus_names() {
    static const std::vector<std::string> names{"trivial-c2", "sl23", "gl23", "d7", "s3-obstructed", "c7c3"};
    return names;
}

InstanceSpec corpus_instance(const std::string& name) {
    Json j;
    j["name"] = name;
    const Perm t = matrix_perm(3, {1, 1, 0, 1});
    const Perm w = matrix_perm(3, {0, 2, 1, 0});
    const Perm q = matrix_perm(3, {1, 1, 1, 2});
    const Perm dg = matrix_perm(3, {2, 0, 0, 1});
    auto affine = [](std::uint32_t a, std::uint32_t b) {
        Perm p(7);
        for (std::uint32_t x = 0; x < 7; ++x) p[x] = (a * x + b) % 7;
        return p;
    };
    if (name == "trivial-c2") {
        j["group"] = {{"degree", 2}, {"generators", perms_json({{1, 0}})}};
        j["D"] = {{"elements", {0}}};
        j["field"] = {{"p", 2}, {"n", 1}};
    } else if (name == "sl23") {
        j["group"] = {{"degree", 8}, {"generators", perms_json({t, w})}};
        j["D"] = {{"permutations", perms_json({w, q})}};
        j["field"] = {{"p", 3}, {"n", 1}};
    } else if (name == "gl23") {
        j["group"] = {{"degree", 8}, {"generators", perms_json({t, w, dg})}};
        j["D"] = {{"permutations", perms_json({w, q})}};
        j["H"] = {{"permutations", perms_json({t, w})}};
        j["field"] = {{"p", 3}, {"n", 1}};
    } else if (name == "d7") {
        j["group"] = {{"degree", 7}, {"generators", perms_json({affine(1, 1), affine(6, 0)})}};
        j["D"] = {{"permutations", perms_json({affine(1, 1)})}};
        j["field"] = {{"p", 2}, {"n", 1}};
    } else if (name == "s3-obstructed") {
        j["group"] = {{"degree", 3}, {"generators", perms_json({{1, 2, 0}, {1, 0, 2}})}};
        j["D"] = {{"permutations", perms_json({{1, 2, 0}})}};
        j["field"] = {{"p", 2}, {"n", 1}};
        j["expect"] = "galois-obstruction";
    } else if (name == "c7c3") {
        j["group"] = {{"degree", 7}, {"generators", perms_json({affine(1, 1), affine(2, 0)})}};
        j["D"] = {{"permutations", perms_json({affine(1, 1)})}};
        j["field"] = {{"p", 2}, {"n", 1}};
        j["expect"] = "galois-obstruction";
    } else {
        throw InstanceError("--corpus", "unknown corpus instance \"" + name + "\"");
    }
    j["selector"] = "invariant-block";
    j["seed"] = 0;
    return parse_instance(j);
}

}  // namespace primequot
