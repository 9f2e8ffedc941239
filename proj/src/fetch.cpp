#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "injcol/canonical.hpp"
#include "injcol/codec.hpp"
#include "injcol/families.hpp"
#include "injcol/harness.hpp"
#include "injcol/solver.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace injcol
{

namespace
{

constexpr const char* default_hog_url = "https://houseofgraphs.org/api/graphs/{id}";

// Any string in the response that decodes as graph6 of the expected order.
std::optional<Graph> find_graph6(const std::string& body, std::size_t order)
{
    std::vector<std::string> candidates;
    try {
        std::vector<nlohmann::json> stack{nlohmann::json::parse(body)};
        while (!stack.empty()) {
            auto j = std::move(stack.back());
            stack.pop_back();
            if (j.is_string())
                candidates.push_back(j.get<std::string>());
            else if (j.is_structured())
                for (auto& item : j.items())
                    stack.push_back(item.value());
        }
    } catch (const nlohmann::json::exception&) {
        std::istringstream in(body);
        for (std::string line; std::getline(in, line);)
            candidates.push_back(line);
    }
    for (const auto& c : candidates) {
        try {
            auto g = parse_graph6(c);
            if (g.order() == order)
                return g;
        } catch (const Graph6Error&) {
        }
    }
    return std::nullopt;
}

std::string download(const std::string& url)
{
    const auto scheme_end = url.find("://");
    const auto path_start = url.find('/', scheme_end == std::string::npos ? 0 : scheme_end + 3);
    const auto origin = url.substr(0, path_start);
    const auto path = path_start == std::string::npos ? std::string("/") : url.substr(path_start);
    httplib::Client client(origin);
    client.set_follow_location(true);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    auto res = client.Get(path);
    if (!res)
        throw FixtureError("download of " + url + " failed: " + httplib::to_string(res.error()));
    if (res->status != 200)
        throw FixtureError("download of " + url + " returned HTTP " + std::to_string(res->status));
    return res->body;
}

void update_manifest(const std::filesystem::path& dir, const FixtureInfo& info, const Graph& g,
                     const MarkedTriangle& t)
{
    const auto path = dir / "manifest.json";
    nlohmann::json doc;
    {
        std::ifstream in(path);
        doc = nlohmann::json::parse(in);
    }
    const auto text = write_graph6(g);
    for (auto& entry : doc.at("fixtures"))
        if (entry.at("name") == info.name) {
            entry["source"] = "hog";
            entry["size"] = g.size();
            entry["checksum"] = graph6_checksum(text);
            entry["marks"] = {{"u", t.u}, {"v", t.v}, {"w", t.w}};
        }
    std::ofstream(dir / info.file) << text << "\n";
    std::ofstream(path) << doc.dump(2) << "\n";
}

} // namespace

FixtureCheck fetch_fixture(std::uint64_t hog_id, const std::filesystem::path& dir, bool network_enabled)
{
    std::optional<FixtureInfo> entry;
    for (const auto& f : fixture_manifest(dir))
        if (f.hog_id == hog_id)
            entry = f;
    if (!entry)
        throw FixtureError("no manifest entry for House of Graphs id " + std::to_string(hog_id) +
                           "; add one to " + (dir / "manifest.json").string() + " with the expected invariants");
    if (!network_enabled)
        throw FixtureError("fetching id " + std::to_string(hog_id) +
                           " needs network access; rerun with --network, or use the shipped fixture '" +
                           entry->name + "'");

    std::string url = default_hog_url;
    if (const char* env = std::getenv("INJCOL_HOG_URL"); env && *env)
        url = env;
    if (auto pos = url.find("{id}"); pos != std::string::npos)
        url.replace(pos, 4, std::to_string(hog_id));

    const auto body = download(url);
    auto g = find_graph6(body, entry->order);
    if (!g)
        throw FixtureError("response from " + url + " holds no graph6 string of order " +
                           std::to_string(entry->order));

    FixtureCheck check{entry->name, false, {}};
    if (max_degree(*g) != entry->max_degree) {
        check.detail = "max degree " + std::to_string(max_degree(*g)) + " differs from manifest; not stored";
        return check;
    }
    const auto r = injective_chromatic_number(*g);
    if (r.chi_i != entry->chi_i) {
        check.detail = "chi_i " + std::to_string(r.chi_i) + " differs from manifest; not stored";
        return check;
    }

    if (entry->source != "search-substitute") {
        // Transcribed graphs keep their labelling, since the marks refer to it.
        const auto stored = load_fixture(*entry, dir);
        if (canonical_certificate(stored.graph) != canonical_certificate(*g)) {
            check.detail = "downloaded graph is not isomorphic to the transcription; not stored";
            return check;
        }
        check.ok = true;
        check.detail = "isomorphic to the stored transcription";
        return check;
    }

    if (!is_planar(*g) || !vertex_connectivity_at_least(*g, 3)) {
        check.detail = "downloaded graph is not 3-connected planar; not stored";
        return check;
    }
    const auto t = find_h_triangle(*g);
    if (!t) {
        check.detail = "downloaded graph has no suitable marked triangle; not stored";
        return check;
    }
    update_manifest(dir, *entry, *g, *t);
    check.ok = true;
    check.detail = "stored, replacing the search substitute";
    return check;
}

} // namespace injcol
