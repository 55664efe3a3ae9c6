// Generates the synthetic news corpus shipped in data/demo_corpus.jsonl.
//
// Each record is a short story: a handful of structured events plus a
// reference article written from the same events the way a person might,
// with varied linking words, the odd rephrasing and extra context sentences.

#include <cctype>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hnlg/corpus.hpp"
#include "hnlg/error.hpp"
#include "hnlg/random.hpp"
#include "hnlg/realizer.hpp"
#include "hnlg/template_dsl.hpp"
#include "hnlg/text_util.hpp"

namespace {

using hnlg::SeededRng;
using hnlg::StructuredEvent;
using Pool = std::vector<std::string>;

const Pool kFirstNames = {
    "Anna",   "Ben",    "Carla",  "David", "Elena",  "Farid",   "Grace",   "Hugo",  "Irene",  "Jonas",
    "Karin",  "Luis",   "Maria",  "Nikolai", "Olga", "Peter",   "Quentin", "Rosa",  "Stefan", "Tanja",
    "Ulrich", "Vera",   "Walter", "Xenia", "Yusuf",  "Zoe",     "Amir",    "Bettina", "Dmitri", "Emma",
    "Felix",  "Greta",  "Hans",   "Ines",  "Jakob",  "Klara",   "Lena",    "Marco", "Nora",   "Oskar",
    "Paula",  "Rafael", "Sofia",  "Tomas", "Ursula", "Viktor",  "Wanda",   "Aisha", "Bruno",  "Chen",
    "Daria",  "Erik",   "Fatima", "Georg", "Hanna",  "Ivan",    "Julia",   "Kofi",  "Leila",  "Mateo"};

const Pool kLastNames = {
    "Weber",   "Schmidt", "Rossi",   "Novak",   "Fischer", "Moreau",  "Lindqvist", "Kowalski", "Haddad",  "Tanaka",
    "Okafor",  "Silva",   "Jensen",  "Meyer",   "Bauer",   "Dubois",  "Costa",     "Horvat",   "Nielsen", "Petrov",
    "Romero",  "Santos",  "Vogel",   "Wagner",  "Ziegler", "Brandt",  "Keller",    "Lang",     "Martens", "Richter",
    "Sommer",  "Hartmann", "Krause", "Lehmann", "Berger",  "Kaiser",  "Fuchs",     "Peters",   "Jung",    "Hahn",
    "Schubert", "Roth",   "Beck",    "Lorenz",  "Baumann", "Albrecht", "Ludwig",   "Winter",   "Schuster", "Stein",
    "Jaeger",  "Sauer",   "Graf",    "Seidel",  "Brenner", "Mendes",  "Ortega",    "Ivanova",  "Yilmaz",  "Mensah"};

const Pool kTitles = {"Health Minister", "Finance Minister", "Chancellor",      "Mayor",          "Governor",
                      "Economy Minister", "Labour Minister", "Transport Minister", "Prime Minister", "Senator",
                      "Professor",       "Judge",            "Commissioner",    "President",      "Director"};

const Pool kCountries = {"Germany", "France",   "Italy",    "Spain",     "Poland",  "Austria",  "Denmark",
                         "Sweden",  "Norway",   "Finland",  "Portugal",  "Greece",  "Ireland",  "Belgium",
                         "Hungary", "Romania",  "Croatia",  "Canada",    "Japan",   "Brazil",   "India",
                         "Mexico",  "Kenya",    "Nigeria",  "Egypt",     "Turkey",  "Chile",    "Peru",
                         "Argentina", "Australia", "Vietnam", "Indonesia", "Morocco", "Ghana", "Iceland",
                         "Estonia", "Latvia",   "Slovenia", "Bulgaria",  "Colombia"};

const Pool kCities = {"Berlin",    "Hamburg",  "Munich",    "Cologne",   "Frankfurt", "Stuttgart", "Leipzig",
                      "Dresden",   "Bremen",   "Hanover",   "Nuremberg", "Paris",     "Lyon",      "Marseille",
                      "Milan",     "Rome",     "Naples",    "Madrid",    "Barcelona", "Seville",   "Lisbon",
                      "Porto",     "Vienna",   "Graz",      "Zurich",    "Geneva",    "Brussels",  "Antwerp",
                      "Amsterdam", "Rotterdam", "Copenhagen", "Stockholm", "Oslo",    "Helsinki",  "Warsaw",
                      "Krakow",    "Prague",   "Budapest",  "Bucharest", "Athens",    "Dublin",    "Toronto",
                      "Montreal",  "Tokyo",    "Osaka",     "Nairobi",   "Lagos",     "Cairo",     "Istanbul",
                      "Santiago",  "Lima",     "Sydney",    "Hanoi",     "Jakarta",   "Accra",     "Tallinn",
                      "Riga",      "Vilnius",  "Zagreb",    "Bologna"};

const Pool kRegions = {"the north", "the south", "the east", "the west", "rural areas", "the capital",
                       "coastal towns", "the border region", "the suburbs", "mountain villages"};

const Pool kOrgs = {"the health ministry",       "the central bank",        "the city council",
                    "the transport authority",   "the national rail operator", "the teachers union",
                    "the energy regulator",      "the statistics office",   "the chamber of commerce",
                    "the hospital association",  "the airport operator",    "the football federation",
                    "the weather service",       "the finance ministry",    "the labour ministry",
                    "the environment agency",    "the consumer association", "the police",
                    "the fire brigade",          "the university",          "the regional government",
                    "the federal court",         "the parliament",          "the opposition",
                    "the ruling coalition",      "the employers association", "the housing agency",
                    "the port authority",        "the water utility",       "the tax office",
                    "the carmakers association", "the farmers union",       "the nurses union",
                    "the competition watchdog",  "the data protection office", "the school board"};

const Pool kFollowSubjects = {"we",        "it",         "they",          "officials",   "the government",
                              "critics",   "experts",    "local leaders", "residents",   "the company",
                              "economists", "doctors",   "unions",        "businesses",  "the ministry",
                              "lawmakers", "investors",  "scientists",    "campaigners", "the authorities"};

struct Domain {
  Pool nouns;
  Pool adjectives;
  Pool plurals;
  Pool purposes;
};

const std::vector<Domain> kDomains = {
    {{"vaccine", "lockdown", "testing programme", "hospital budget", "mask rule", "booster campaign",
      "intensive care capacity", "quarantine rule", "health reform", "clinic network", "infection rate",
      "virus variant", "care home policy", "pandemic plan"},
     {"new", "strict", "temporary", "national", "mandatory", "voluntary", "regional", "emergency"},
     {"infections", "hospital admissions", "vaccinations", "test results", "patients", "nurses", "doctors",
      "beds"},
     {"avoid a second wave", "protect older people", "ease pressure on hospitals", "slow the spread of the virus",
      "keep schools open", "reduce waiting times", "support care workers"}},
    {{"budget", "tax cut", "stimulus package", "interest rate", "wage deal", "pension plan", "trade agreement",
      "export forecast", "growth target", "debt limit", "minimum wage", "subsidy scheme", "spending review",
      "inflation outlook"},
     {"annual", "ambitious", "modest", "record", "revised", "controversial", "long awaited", "federal"},
     {"prices", "exports", "wages", "profits", "orders", "jobs", "rents", "savings"},
     {"support small firms", "lower energy bills", "protect jobs", "attract investors", "stabilise prices",
      "cut public debt", "boost consumer spending"}},
    {{"rail line", "bus network", "airport expansion", "motorway project", "bike lane", "ticket price",
      "train timetable", "ferry service", "tram extension", "parking fee", "speed limit", "bridge repair",
      "metro line", "freight corridor"},
     {"busy", "delayed", "costly", "modern", "electric", "high speed", "regional", "overdue"},
     {"passengers", "commuters", "delays", "fares", "trains", "drivers", "flights", "cyclists"},
     {"cut travel times", "ease congestion", "reduce emissions", "connect rural areas", "improve safety",
      "attract more passengers", "modernise the network"}},
    {{"wind farm", "solar project", "gas pipeline", "power plant", "coal exit", "energy price cap",
      "heating plan", "grid upgrade", "nuclear plant", "hydrogen strategy", "battery factory",
      "efficiency standard", "fuel tax", "electricity tariff"},
     {"green", "offshore", "renewable", "large", "cheaper", "controversial", "clean", "new"},
     {"bills", "emissions", "gas prices", "power cuts", "households", "turbines", "reserves", "tariffs"},
     {"secure winter supplies", "lower energy bills", "meet climate targets", "reduce imports",
      "expand renewable power", "protect households", "stabilise the grid"}},
    {{"school reform", "exam schedule", "teacher shortage", "digital classroom", "university fee",
      "student grant", "reading programme", "school meal plan", "curriculum change", "training scheme",
      "kindergarten place", "language course", "research fund", "apprenticeship programme"},
     {"new", "national", "free", "delayed", "improved", "expanded", "local", "compulsory"},
     {"pupils", "teachers", "students", "classes", "schools", "parents", "graduates", "exams"},
     {"close the skills gap", "help struggling pupils", "attract more teachers", "support young families",
      "improve reading skills", "prepare students for work"}},
    {{"flood defence", "climate target", "drought plan", "forest protection", "recycling rule",
      "plastic ban", "emission law", "heat warning", "water restriction", "carbon price", "storm warning",
      "wildlife reserve", "coastal barrier", "tree planting campaign"},
     {"strict", "ambitious", "urgent", "long term", "binding", "local", "new", "weaker"},
     {"temperatures", "floods", "fires", "emissions", "rivers", "farmers", "storms", "volunteers"},
     {"protect coastal towns", "cut emissions", "save water", "restore forests", "prepare for heatwaves",
      "reduce plastic waste"}},
    {{"data law", "software update", "broadband plan", "chip factory", "online platform", "cyber attack",
      "mobile network", "privacy rule", "start up fund", "artificial intelligence strategy", "payment app",
      "satellite launch", "cloud contract", "digital identity card"},
     {"secure", "faster", "national", "new", "open", "controversial", "private", "digital"},
     {"users", "downloads", "engineers", "customers", "hackers", "servers", "developers", "subscribers"},
     {"close coverage gaps", "protect user data", "attract engineers", "speed up services",
      "strengthen cyber defences", "support young companies"}},
    {{"rent cap", "housing project", "building permit", "social housing plan", "mortgage rule", "tenant law",
      "construction target", "zoning plan", "home insulation grant", "property tax", "student dormitory",
      "eviction ban", "renovation subsidy", "affordable flat scheme"},
     {"affordable", "vacant", "crowded", "unfinished", "public", "luxury", "cheap", "planned"},
     {"tenants", "landlords", "flats", "builders", "homeowners", "apartments", "neighbourhoods", "architects"},
     {"ease the housing shortage", "protect tenants", "speed up construction", "cut heating costs",
      "revive empty town centres", "house young families"}},
    {{"harvest forecast", "fishing quota", "pesticide ban", "milk price", "farm subsidy", "irrigation scheme",
      "animal welfare law", "grain export", "organic label", "fertiliser rule", "crop insurance",
      "forestry plan", "vineyard support", "food safety check"},
     {"poor", "bumper", "organic", "seasonal", "dry", "wet", "rural", "traditional"},
     {"farmers", "fishermen", "harvests", "cattle", "vineyards", "orchards", "crops", "growers"},
     {"secure food supplies", "support family farms", "protect fish stocks", "save struggling vineyards",
      "keep milk prices fair", "reduce pesticide use"}},
    {{"stadium plan", "transfer rule", "league reform", "doping test", "ticket policy", "youth academy",
      "broadcast deal", "olympic bid", "coaching change", "fan zone", "security plan", "cup schedule",
      "club licence", "training ground"},
     {"packed", "historic", "disappointing", "surprising", "crucial", "home", "away", "final"},
     {"fans", "players", "clubs", "coaches", "referees", "athletes", "spectators", "sponsors"},
     {"win back supporters", "keep the league competitive", "fight doping", "protect young players",
      "fill empty stadiums", "attract sponsors"}},
    {{"museum reopening", "festival programme", "film fund", "library closure", "theatre budget",
      "heritage list", "concert series", "art prize", "book fair", "orchestra tour", "gallery extension",
      "cultural pass", "opera season", "monument restoration"},
     {"famous", "modest", "sold out", "experimental", "popular", "classical", "free", "restored"},
     {"visitors", "artists", "musicians", "writers", "tourists", "exhibitions", "readers", "actors"},
     {"bring visitors back", "support young artists", "preserve old buildings", "reach new audiences",
      "keep libraries open", "promote local music"}},
    {{"police reform", "court ruling", "prison plan", "border check", "crime report", "surveillance law",
      "weapons ban", "fraud inquiry", "corruption probe", "witness programme", "curfew order",
      "sentencing rule", "patrol schedule", "emergency number"},
     {"landmark", "secret", "lengthy", "tougher", "independent", "criminal", "public", "fresh"},
     {"officers", "judges", "prisoners", "suspects", "victims", "lawyers", "witnesses", "arrests"},
     {"restore public trust", "reduce street crime", "speed up trials", "protect victims",
      "fight organised crime", "ease prison overcrowding"}},
};

const Pool kVerbs = {"announced", "approved",  "rejected",  "proposed",  "launched", "postponed", "expanded",
                     "criticised", "welcomed", "defended",  "extended",  "suspended", "introduced", "unveiled",
                     "promised",  "demanded",  "reviewed",  "signed",    "opened",   "delayed",   "cancelled",
                     "funded",    "blocked",   "backed",    "questioned", "confirmed", "doubled",  "reduced",
                     "plans",     "expects",   "will introduce", "has to finance", "wants to reform",
                     "is preparing", "must review", "will change", "is discussing", "has to organise"};

const Pool kIntransitive = {"agreed",     "hesitated", "resigned",   "protested", "recovered",
                            "are living", "waited",    "struck",     "improved",  "stalled"};

const Pool kTrend = {"rose", "fell", "doubled", "increased", "dropped", "climbed", "slowed", "jumped"};
const Pool kTrendAdverb = {"sharply", "slightly", "again", "last month", "this year", "for weeks", "steadily"};
const Pool kState = {"too small", "out of date", "under pressure", "too expensive", "overdue", "incomplete",
                     "unpopular", "running late"};
const Pool kWeekdays = {"Monday", "Tuesday", "Wednesday", "Thursday", "Friday", "Saturday", "Sunday"};
const Pool kMonths = {"January", "February", "March",     "April",   "May",      "June",
                      "July",    "August",   "September", "October", "November", "December"};

const Pool kAmounts = {"more", "new", "fewer", "extra", "hundreds of", "thousands of", "two new", "ten"};
const Pool kBecause = {"as", "since", "after", "because"};
const Pool kInOrderTo = {"to", "to", "so as to", "hoping to"};

const Pool kHumanConnectives = {"Meanwhile,", "However,", "At the same time,", "Separately,",  "Still,",
                                "Later,",     "Also,",    "Earlier,",          "In a statement,", "On top of that,",
                                "Even so,",   "By then,"};

// Context sentences a reporter would add. Slots are filled from the pools
// above and from the story's domain.
const Pool kFiller = {
    "Officials did not immediately respond to requests for comment.",
    "The decision drew sharp criticism from {org}.",
    "{person}, a spokesperson for {org}, declined to comment.",
    "Analysts at {org} had expected a different outcome.",
    "The debate over the {noun} has divided opinion in {city} for months.",
    "Similar plans failed in {country} in {year}.",
    "Few details were given about the timetable.",
    "The figures will be reviewed again next {weekday}.",
    "Local newspapers reported long queues in {city}.",
    "{person} called the move a step in the right direction.",
    "Opposition politicians say the {noun} comes too late for {plural}.",
    "It was not clear how the {adj} {noun} would be paid for.",
    "Reporters were told that talks with {org} would continue.",
    "Demonstrators gathered outside the offices in {city} on {weekday}.",
    "The last comparable decision was taken in {year}.",
    "A final vote is expected before {month}.",
    "Residents in {city} said they felt left out of the process.",
    "The announcement surprised many {plural}.",
    "{person} warned that the costs could rise further.",
    "Business groups in {country} reacted cautiously.",
    "The proposal still needs the approval of {org}.",
    "Several {plural} urged patience.",
    "Public support for the {noun} has grown steadily since {year}.",
    "Neighbouring {country} is watching the outcome closely.",
    "Critics argue the figures on {plural} are misleading.",
    "{title} {person} said more information would follow soon.",
    "Ministers met late into the night to settle the details.",
    "The cost has not been made public.",
    "Trade unions promised to keep up the pressure on {org}.",
    "Questions remain about who will carry out the work.",
    "Roughly {num} {plural} signed a petition against it.",
    "Polls suggest {num} percent of voters back the idea.",
    "\"We cannot wait any longer\", {person} told a local radio station.",
    "\"This is only the beginning\", said {person} of {org}.",
    "Earlier this year {org} published a critical report on {plural}.",
    "The {adj} {noun} is the first of its kind in {country}.",
    "Some {plural} in {city} fear they will pay the price.",
    "A court in {city} is due to hear a complaint in {month}.",
    "The plan was first floated by {title} {person} in {year}.",
    "Observers in {country} described the mood as tense.",
    "Nobody from {org} attended the meeting in {city}.",
    "According to {org}, around {num} {plural} could be affected.",
    "The {noun} had long been a sore point for {plural}.",
    "Supporters hope the {noun} will help {purpose}.",
    "Sceptics doubt it will {purpose} any time soon.",
    "An independent review is planned for {month} {year}.",
    "Earlier attempts to {purpose} ran into legal trouble.",
    "Crowds in {city} cheered when the news broke.",
    "The mood among {plural} remains gloomy.",
    "Newspapers in {country} gave the story their front pages.",
};

const std::string& pick(SeededRng& rng, const Pool& pool) { return pool[rng.index(pool.size())]; }

// Skewed towards the front of the pool, roughly like word frequencies in news.
const std::string& pick_common(SeededRng& rng, const Pool& pool) {
  const double u = rng.uniform();
  return pool[static_cast<std::size_t>(u * u * u * u * static_cast<double>(pool.size()))];
}

std::string person(SeededRng& rng) { return pick(rng, kFirstNames) + " " + pick(rng, kLastNames); }

// Event fields come from structured data and repeat far more than the prose
// around them, so they use skewed draws; filler sentences use uniform ones.
std::string event_person(SeededRng& rng) { return pick_common(rng, kFirstNames) + " " + pick_common(rng, kLastNames); }

std::string entity(SeededRng& rng) {
  switch (rng.index(5)) {
    case 0: return pick_common(rng, kCountries);
    case 1: return pick_common(rng, kCities);
    case 2: return pick_common(rng, kTitles) + " " + event_person(rng);
    case 3: return event_person(rng);
    default: return pick_common(rng, kOrgs);
  }
}

std::string object_phrase(SeededRng& rng, const Domain& d) {
  switch (rng.index(6)) {
    case 0: return "the " + pick_common(rng, d.nouns);
    case 1: return "a " + pick_common(rng, d.adjectives) + " " + pick_common(rng, d.nouns);
    case 2:
      return "the " + pick_common(rng, d.adjectives) + " " + pick_common(rng, d.nouns) + " for " +
             pick_common(rng, d.plurals);
    case 3: return pick_common(rng, kAmounts) + " " + pick_common(rng, d.plurals);
    case 4: return "plans for " + pick_common(rng, d.plurals);
    default: return "its " + pick_common(rng, d.nouns);
  }
}

std::string reason_clause(SeededRng& rng, const Domain& d) {
  switch (rng.index(5)) {
    case 0: return pick_common(rng, d.plurals) + " " + pick_common(rng, kTrend) + " " + pick_common(rng, kTrendAdverb);
    case 1: return pick_common(rng, kLastNames) + " said";
    case 2: return "the " + pick_common(rng, d.nouns) + " was " + pick_common(rng, kState);
    case 3: return pick_common(rng, kOrgs) + " asked for more time";
    default: return "demand for " + pick_common(rng, d.plurals) + " grew";
  }
}

StructuredEvent make_event(SeededRng& rng, const Domain& d, const std::string& lead, bool first) {
  StructuredEvent e;
  if (first) {
    e.subject = lead;
  } else {
    const std::size_t k = rng.index(10);
    e.subject = k < 7 ? pick_common(rng, kFollowSubjects) : k < 8 ? lead : entity(rng);
  }
  if (rng.bernoulli(0.85)) {
    e.verb = pick_common(rng, kVerbs);
    e.object = object_phrase(rng, d);
  } else {
    e.verb = pick_common(rng, kIntransitive);
  }
  if (rng.bernoulli(0.2)) e.area = rng.bernoulli(0.8) ? pick_common(rng, kCities) : pick_common(rng, kRegions);
  if (rng.bernoulli(0.15)) e.reason = reason_clause(rng, d);
  if (rng.bernoulli(0.25)) {
    e.week = pick_common(rng, kWeekdays);
  } else if (rng.bernoulli(0.15)) {
    e.date = pick(rng, kMonths) + " " + std::to_string(1 + rng.index(28));
  } else if (rng.bernoulli(0.15)) {
    e.month = pick(rng, kMonths);
    if (rng.bernoulli(0.6)) e.year = std::to_string(2015 + rng.index(9));
  }
  if (rng.bernoulli(0.15)) e.purpose = pick_common(rng, d.purposes);
  return e;
}

std::string fill(std::string text, SeededRng& rng, const Domain& d) {
  auto replace = [&](const std::string& slot, auto make) {
    for (std::size_t at = text.find(slot); at != std::string::npos; at = text.find(slot)) {
      text.replace(at, slot.size(), make());
    }
  };
  replace("{org}", [&] { return pick(rng, kOrgs); });
  replace("{person}", [&] { return person(rng); });
  replace("{city}", [&] { return pick(rng, kCities); });
  replace("{country}", [&] { return pick(rng, kCountries); });
  replace("{weekday}", [&] { return pick(rng, kWeekdays); });
  replace("{year}", [&] { return std::to_string(2010 + rng.index(12)); });
  replace("{month}", [&] { return pick(rng, kMonths); });
  replace("{title}", [&] { return pick(rng, kTitles); });
  replace("{noun}", [&] { return pick(rng, d.nouns); });
  replace("{plural}", [&] { return pick(rng, d.plurals); });
  replace("{adj}", [&] { return pick(rng, d.adjectives); });
  replace("{purpose}", [&] { return pick(rng, d.purposes); });
  replace("{num}", [&] { return std::to_string(3 + rng.index(97)); });
  return hnlg::text::capitalize_first(text);
}

void replace_word(std::string& s, const std::string& from, const std::string& to) {
  if (auto at = s.find(from); at != std::string::npos) s.replace(at, from.size(), to);
}

// Writes the events up the way a reporter would.
std::string reference_text(const hnlg::EventSequence& seq, const hnlg::TemplateSet& ts, const Domain& d,
                           SeededRng& rng) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const StructuredEvent& e = seq[i];
    std::string s = hnlg::lexicalize(hnlg::determine_content(e, ts, i));
    if (rng.bernoulli(0.6)) replace_word(s, " because ", " " + pick(rng, kBecause) + " ");
    if (rng.bernoulli(0.7)) replace_word(s, " in order to ", " " + pick(rng, kInOrderTo) + " ");
    if (i > 0) {
      const auto proper = hnlg::proper_noun_tokens(e);
      const std::string head = s.substr(0, s.find(' '));
      const bool keep_case = proper.contains(head) || (head.size() > 1 && std::isupper(static_cast<unsigned char>(head[1])));
      if (rng.bernoulli(0.1)) {
        const std::size_t c = rng.index(ts.connectives.size());
        s = ts.connectives[c] + " " + (keep_case ? s : hnlg::text::lowercase_first(s));
      } else if (rng.bernoulli(0.35)) {
        s = pick(rng, kHumanConnectives) + " " + (keep_case ? s : hnlg::text::lowercase_first(s));
      }
    }
    out.push_back(std::move(s));
    for (std::size_t extra = rng.index(4); extra > 0; --extra) out.push_back(fill(pick(rng, kFiller), rng, d));
  }
  return hnlg::text::join(out, " ");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generate the synthetic demo news corpus"};
  std::filesystem::path templates = HNLG_DATA_DIR "/news.tpl";
  std::filesystem::path out = "demo_corpus.jsonl";
  std::size_t count = 900;
  std::uint64_t seed = 2021;
  app.add_option("-t,--templates", templates, "template file used to phrase the events");
  app.add_option("-o,--out", out, "output JSON Lines file");
  app.add_option("-n,--records", count, "number of records")->check(CLI::PositiveNumber);
  app.add_option("-s,--seed", seed, "random seed");
  CLI11_PARSE(app, argc, argv);

  try {
    const hnlg::TemplateSet ts = hnlg::load_template_set(templates);
    SeededRng rng(seed);
    std::vector<hnlg::CorpusRecord> records;
    records.reserve(count);
    for (std::size_t r = 0; r < count; ++r) {
      // A few topics dominate any period's news.
      const double u = rng.uniform();
      const Domain& d = kDomains[static_cast<std::size_t>(u * u * static_cast<double>(kDomains.size()))];
      const std::string lead = entity(rng);
      const std::size_t n_events = 5 + rng.index(4);
      std::vector<StructuredEvent> events;
      for (std::size_t i = 0; i < n_events; ++i) events.push_back(make_event(rng, d, lead, i == 0));
      hnlg::EventSequence seq(std::move(events));

      hnlg::CorpusRecord rec{.id = "news-" + std::to_string(10000 + r).substr(1),
                             .reference_text = reference_text(seq, ts, d, rng),
                             .events = seq,
                             .keywords = hnlg::default_keywords(seq)};
      records.push_back(std::move(rec));
    }
    hnlg::write_corpus(out, records);
    std::cerr << "wrote " << records.size() << " records to " << out.string() << "\n";
  } catch (const hnlg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
