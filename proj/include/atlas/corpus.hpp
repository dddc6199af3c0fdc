// Copyright (c) 2026 The atlas developers.
// This file is part of atlas, released under the Apache License 2.0.

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace atlas::corpus {

struct PatentRecord {
    std::string patent_id;
    int grant_year = 0;
    std::string title;
    std::string abstract;
    std::set<std::string> ipc_classes;
    std::set<std::string> upc_classes;
    std::set<std::string> cited_patent_ids;
    std::vector<std::string> npl_citations;

    bool operator==(const PatentRecord&) const = default;
};

struct DomainDefinition {
    std::string domain_name;
    std::set<std::string> patent_ids;
    std::optional<double> relevancy; // fraction in [0,1]
};

struct EmergingTopic {
    std::string topic_id;
    std::string label;
    int identified_year = 0;
    std::set<std::string> paper_ids;
};

struct EmergingCluster {
    std::string cluster_id;
    int subject_year = 0;
    std::set<std::string> patent_ids;
};

/// Immutable after load; shared read-only by all analysis modules.
class Corpus {
public:
    Corpus() = default;
    explicit Corpus(std::vector<PatentRecord> records);

    const std::vector<PatentRecord>& records() const { return records_; }
    std::size_t size() const { return records_.size(); }
    bool contains(const std::string& patent_id) const;
    const PatentRecord* find(const std::string& patent_id) const;
    const PatentRecord& at(const std::string& patent_id) const;

    int min_year() const;
    int max_year() const;

    bool operator==(const Corpus& other) const { return records_ == other.records_; }

private:
    std::vector<PatentRecord> records_;
    std::unordered_map<std::string, std::size_t> by_id_;
};

enum class Format { jsonl, csv };
Format parse_format(const std::string& name);

Corpus load_patents(const std::filesystem::path& path, Format format);
void write_patents(const std::filesystem::path& path, const Corpus& corpus, Format format);

/// Domain file: JSON object domain_name -> {ids:[...], relevancy}.
/// Strict mode requires every referenced patent id to resolve in `against`.
std::vector<DomainDefinition> load_domains(const std::filesystem::path& path,
                                           const Corpus* against = nullptr,
                                           bool strict = true);
void write_domains(const std::filesystem::path& path, const std::vector<DomainDefinition>& domains);

struct EmergenceData {
    std::vector<EmergingCluster> clusters;
    std::vector<EmergingTopic> topics;
};

EmergenceData load_emergence(const std::filesystem::path& path,
                             const Corpus* against = nullptr,
                             bool strict = true);
void write_emergence(const std::filesystem::path& path, const EmergenceData& data);

} // namespace atlas::corpus
