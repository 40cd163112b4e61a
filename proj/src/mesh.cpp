#include "wyrm/mesh.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstring>
#include <limits>
#include <map>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace wyrm::mesh {

namespace {

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

bool parse_double_token(std::string_view s, double& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

// Key for bit-exact vertex deduplication.
struct VertexBits {
    std::uint64_t x, y, z;
    bool operator==(const VertexBits&) const = default;
};

struct VertexBitsHash {
    size_t operator()(const VertexBits& v) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint64_t w : {v.x, v.y, v.z}) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

VertexBits bits_of(Vec3 v) {
    VertexBits b{};
    std::memcpy(&b.x, &v.x, 8);
    std::memcpy(&b.y, &v.y, 8);
    std::memcpy(&b.z, &v.z, 8);
    return b;
}

class VertexDedup {
public:
    explicit VertexDedup(TriangleMesh& mesh) : mesh_(mesh) {}

    std::uint32_t index_of(Vec3 v) {
        const auto [it, inserted] = seen_.try_emplace(bits_of(v), mesh_.vertices.size());
        if (inserted) mesh_.vertices.push_back(v);
        return static_cast<std::uint32_t>(it->second);
    }

private:
    TriangleMesh& mesh_;
    std::unordered_map<VertexBits, size_t, VertexBitsHash> seen_;
};

void push_triangle(TriangleMesh& mesh, std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    if (a == b || b == c || a == c) return;  // degenerate sliver, contributes nothing
    mesh.triangles.push_back({a, b, c});
}

double read_f32(const char* p) {
    float f;
    std::memcpy(&f, p, 4);
    return static_cast<double>(f);
}

// Pairwise (tree) reduction over triangle contributions; the fixed chunk
// size keeps the summation order, and therefore the result, reproducible.
double pairwise_sum(const std::vector<double>& terms, size_t begin, size_t end) {
    constexpr size_t kChunk = 256;
    if (end - begin <= kChunk) {
        double s = 0.0;
        for (size_t i = begin; i < end; ++i) s += terms[i];
        return s;
    }
    const size_t mid = begin + (end - begin) / 2;
    return pairwise_sum(terms, begin, mid) + pairwise_sum(terms, mid, end);
}

}  // namespace

double norm(Vec3 v) { return std::sqrt(dot(v, v)); }

void TriangleMesh::validate() const {
    for (const Vec3& v : vertices)
        if (!(std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z)))
            throw ValidationError("mesh vertex coordinates must be finite");
    for (const Triangle& t : triangles) {
        for (std::uint32_t idx : t)
            if (idx >= vertices.size())
                throw IndexOutOfRange("triangle references vertex " + std::to_string(idx) +
                                      " of " + std::to_string(vertices.size()));
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
            throw ValidationError("degenerate triangle with repeated vertex index");
    }
}

Axis parse_axis(std::string_view text) {
    if (text == "x") return Axis::x;
    if (text == "y") return Axis::y;
    if (text == "z") return Axis::z;
    if (text == "principal") return Axis::principal;
    throw ValidationError("unknown axis: " + std::string(text));
}

TriangleMesh parse_obj(std::string_view text) {
    TriangleMesh mesh;
    size_t line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        const auto tokens = split_ws(line);
        if (tokens.empty() || tokens[0][0] == '#') continue;

        if (tokens[0] == "v") {
            if (tokens.size() < 4)
                throw ParseError("vertex statement needs 3 coordinates (line " +
                                     std::to_string(line_no) + ")",
                                 line_no);
            Vec3 v;
            if (!parse_double_token(tokens[1], v.x) || !parse_double_token(tokens[2], v.y) ||
                !parse_double_token(tokens[3], v.z))
                throw ParseError("malformed vertex coordinate (line " + std::to_string(line_no) +
                                     ")",
                                 line_no);
            mesh.vertices.push_back(v);
        } else if (tokens[0] == "f") {
            if (tokens.size() < 4)
                throw ParseError("face needs at least 3 vertices (line " +
                                     std::to_string(line_no) + ")",
                                 line_no);
            std::vector<std::uint32_t> corners;
            corners.reserve(tokens.size() - 1);
            for (size_t i = 1; i < tokens.size(); ++i) {
                std::string_view ref = tokens[i];
                const size_t slash = ref.find('/');
                if (slash != std::string_view::npos) ref = ref.substr(0, slash);
                long long idx = 0;
                auto [ptr, ec] = std::from_chars(ref.data(), ref.data() + ref.size(), idx);
                if (ec != std::errc{} || ptr != ref.data() + ref.size() || idx == 0)
                    throw ParseError("malformed face index '" + std::string(tokens[i]) +
                                         "' (line " + std::to_string(line_no) + ")",
                                     line_no);
                // OBJ indices are 1-based; negative counts back from the
                // most recently defined vertex.
                const long long resolved =
                    idx > 0 ? idx - 1 : static_cast<long long>(mesh.vertices.size()) + idx;
                if (resolved < 0 || resolved >= static_cast<long long>(mesh.vertices.size()))
                    throw IndexOutOfRange("face references vertex " + std::to_string(idx) +
                                          " of " + std::to_string(mesh.vertices.size()) +
                                          " (line " + std::to_string(line_no) + ")");
                corners.push_back(static_cast<std::uint32_t>(resolved));
            }
            for (size_t i = 1; i + 1 < corners.size(); ++i)
                push_triangle(mesh, corners[0], corners[i], corners[i + 1]);
        }
        // vt, vn, usemtl, mtllib, o, g, s: ignored
    }
    mesh.validate();
    return mesh;
}

namespace {

TriangleMesh parse_stl_ascii(std::string_view text) {
    TriangleMesh mesh;
    VertexDedup dedup(mesh);

    std::vector<Vec3> facet;
    size_t line_no = 0;
    size_t pos = 0;
    bool in_solid = false;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        const auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        if (tokens[0] == "solid") {
            in_solid = true;
            if (tokens.size() > 1 && mesh.name.empty()) mesh.name = std::string(tokens[1]);
        } else if (tokens[0] == "vertex") {
            if (!in_solid)
                throw ParseError("vertex outside solid (line " + std::to_string(line_no) + ")",
                                 line_no);
            if (tokens.size() != 4)
                throw ParseError("vertex needs 3 coordinates (line " + std::to_string(line_no) +
                                     ")",
                                 line_no);
            Vec3 v;
            if (!parse_double_token(tokens[1], v.x) || !parse_double_token(tokens[2], v.y) ||
                !parse_double_token(tokens[3], v.z))
                throw ParseError("malformed vertex coordinate (line " + std::to_string(line_no) +
                                     ")",
                                 line_no);
            facet.push_back(v);
        } else if (tokens[0] == "endfacet") {
            if (facet.size() != 3)
                throw ParseError("facet with " + std::to_string(facet.size()) +
                                     " vertices (line " + std::to_string(line_no) + ")",
                                 line_no);
            const std::uint32_t a = dedup.index_of(facet[0]);
            const std::uint32_t b = dedup.index_of(facet[1]);
            const std::uint32_t c = dedup.index_of(facet[2]);
            push_triangle(mesh, a, b, c);
            facet.clear();
        }
        // facet normal, outer loop, endloop, endsolid: no action needed
    }
    if (!in_solid) throw ParseError("not an ASCII STL (no 'solid' keyword)", 1);
    mesh.validate();
    return mesh;
}

TriangleMesh parse_stl_binary(std::string_view bytes) {
    if (bytes.size() < 84) throw TruncatedFile("binary STL shorter than its 84-byte header");
    std::uint32_t count = 0;
    std::memcpy(&count, bytes.data() + 80, 4);
    const size_t expected = 84 + 50ull * count;
    if (bytes.size() != expected)
        throw TruncatedFile("binary STL header claims " + std::to_string(count) +
                            " facets (" + std::to_string(expected) + " bytes) but file has " +
                            std::to_string(bytes.size()) + " bytes");

    TriangleMesh mesh;
    VertexDedup dedup(mesh);
    const char* p = bytes.data() + 84;
    for (std::uint32_t i = 0; i < count; ++i, p += 50) {
        // 12 bytes of normal skipped; winding comes from the vertex order.
        std::array<std::uint32_t, 3> idx{};
        for (int v = 0; v < 3; ++v) {
            const char* vp = p + 12 + 12 * v;
            idx[v] = dedup.index_of({read_f32(vp), read_f32(vp + 4), read_f32(vp + 8)});
        }
        push_triangle(mesh, idx[0], idx[1], idx[2]);
    }
    mesh.validate();
    return mesh;
}

bool looks_binary(std::string_view bytes) {
    if (bytes.size() < 84) return false;
    std::uint32_t count = 0;
    std::memcpy(&count, bytes.data() + 80, 4);
    if (bytes.size() == 84 + 50ull * count) return true;
    return false;
}

}  // namespace

TriangleMesh parse_stl(std::string_view bytes) {
    // Some binary files start with "solid", so the size check wins.
    if (looks_binary(bytes)) return parse_stl_binary(bytes);
    size_t start = 0;
    while (start < bytes.size() && std::isspace(static_cast<unsigned char>(bytes[start]))) ++start;
    if (bytes.compare(start, 5, "solid") == 0) return parse_stl_ascii(bytes);
    if (bytes.size() >= 84) return parse_stl_binary(bytes);  // reports the size mismatch
    throw ParseError("not an STL file (no 'solid' header and too short for binary)", 1);
}

std::string serialize_obj(const TriangleMesh& mesh) {
    std::ostringstream out;
    if (!mesh.name.empty()) out << "o " << mesh.name << '\n';
    for (const Vec3& v : mesh.vertices)
        out << "v " << format_double(v.x) << ' ' << format_double(v.y) << ' '
            << format_double(v.z) << '\n';
    for (const Triangle& t : mesh.triangles)
        out << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
    return out.str();
}

std::string serialize_stl_ascii(const TriangleMesh& mesh) {
    std::ostringstream out;
    const std::string name = mesh.name.empty() ? "mesh" : mesh.name;
    out << "solid " << name << '\n';
    for (const Triangle& t : mesh.triangles) {
        out << "  facet normal 0 0 0\n    outer loop\n";
        for (std::uint32_t idx : t) {
            const Vec3& v = mesh.vertices[idx];
            out << "      vertex " << format_double(v.x) << ' ' << format_double(v.y) << ' '
                << format_double(v.z) << '\n';
        }
        out << "    endloop\n  endfacet\n";
    }
    out << "endsolid " << name << '\n';
    return out.str();
}

std::string serialize_stl_binary(const TriangleMesh& mesh) {
    std::string out(84 + 50 * mesh.triangles.size(), '\0');
    const std::uint32_t count = static_cast<std::uint32_t>(mesh.triangles.size());
    std::memcpy(out.data() + 80, &count, 4);
    char* p = out.data() + 84;
    for (const Triangle& t : mesh.triangles) {
        for (int v = 0; v < 3; ++v) {
            const Vec3& vert = mesh.vertices[t[v]];
            const float coords[3] = {static_cast<float>(vert.x), static_cast<float>(vert.y),
                                     static_cast<float>(vert.z)};
            std::memcpy(p + 12 + 12 * v, coords, 12);
        }
        p += 50;
    }
    return out;
}

double signed_volume(const TriangleMesh& mesh) {
    if (mesh.triangles.empty()) throw EmptyMesh("cannot compute the volume of an empty mesh");
    std::vector<double> terms;
    terms.reserve(mesh.triangles.size());
    for (const Triangle& t : mesh.triangles) {
        const Vec3& v0 = mesh.vertices[t[0]];
        const Vec3& v1 = mesh.vertices[t[1]];
        const Vec3& v2 = mesh.vertices[t[2]];
        terms.push_back(dot(v0, cross(v1, v2)));
    }
    return std::abs(pairwise_sum(terms, 0, terms.size())) / 6.0;
}

std::array<Vec3, 2> bounding_box(const TriangleMesh& mesh) {
    if (mesh.vertices.empty()) throw EmptyMesh("cannot compute the bounding box of an empty mesh");
    Vec3 lo = mesh.vertices.front(), hi = mesh.vertices.front();
    for (const Vec3& v : mesh.vertices) {
        lo = {std::min(lo.x, v.x), std::min(lo.y, v.y), std::min(lo.z, v.z)};
        hi = {std::max(hi.x, v.x), std::max(hi.y, v.y), std::max(hi.z, v.z)};
    }
    return {lo, hi};
}

double characteristic_length(const TriangleMesh& mesh, Axis axis) {
    const auto [lo, hi] = bounding_box(mesh);
    const std::array<double, 3> ext = {hi.x - lo.x, hi.y - lo.y, hi.z - lo.z};
    switch (axis) {
        case Axis::x: return ext[0];
        case Axis::y: return ext[1];
        case Axis::z: return ext[2];
        case Axis::principal: return *std::max_element(ext.begin(), ext.end());
    }
    throw ValidationError("bad axis");
}

double characteristic_length(const TriangleMesh& mesh, Vec3 p1, Vec3 p2) {
    if (mesh.vertices.empty()) throw EmptyMesh("reference points need a mesh");
    const double d = norm(p2 - p1);
    if (d == 0.0) throw InvalidPointPair("reference points coincide");
    return d;
}

TriangleMesh scale_uniform(const TriangleMesh& mesh, double factor) {
    if (!(factor > 0.0)) throw NonPositiveFactor("scale factor must be positive");
    TriangleMesh out = mesh;
    for (Vec3& v : out.vertices) v = factor * v;
    return out;
}

namespace {

bool is_watertight(const TriangleMesh& mesh) {
    // Closed orientable surface: every directed edge matched by its reverse.
    std::map<std::pair<std::uint32_t, std::uint32_t>, int> edges;
    for (const Triangle& t : mesh.triangles) {
        for (int i = 0; i < 3; ++i) {
            const std::uint32_t a = t[i], b = t[(i + 1) % 3];
            edges[{a, b}] += 1;
            edges[{b, a}] -= 1;
        }
    }
    for (const auto& [edge, balance] : edges)
        if (balance != 0) return false;
    return true;
}

}  // namespace

MeshSummary summarize(const TriangleMesh& mesh) {
    MeshSummary s;
    s.volume = signed_volume(mesh);
    const auto [lo, hi] = bounding_box(mesh);
    s.aabb_extents = {hi.x - lo.x, hi.y - lo.y, hi.z - lo.z};
    s.principal_axis_length = *std::max_element(s.aabb_extents.begin(), s.aabb_extents.end());
    s.watertight = is_watertight(mesh);
    return s;
}

std::string to_json_string(const MeshSummary& summary) {
    nlohmann::ordered_json j;
    j["volume"] = {{"value", summary.volume}, {"unit", "m^3"}};
    j["aabb_extents"] = {{"value", summary.aabb_extents}, {"unit", "m"}};
    j["principal_axis_length"] = {{"value", summary.principal_axis_length}, {"unit", "m"}};
    // "unknown" rather than false: an unpaired edge may be a real hole or
    // just bit-unequal duplicated vertices; no repair is attempted.
    j["watertight"] = summary.watertight ? nlohmann::ordered_json(true)
                                         : nlohmann::ordered_json("unknown");
    return j.dump(2);
}

}  // namespace wyrm::mesh
