#include "biblio/countries.hpp"

#include <fstream>
#include <sstream>

#include "biblio/errors.hpp"
#include "biblio/text.hpp"

namespace biblio {

namespace {

// Keep in sync with core/data/countries.txt (same content, shipped for
// user overrides).
constexpr const char* kBuiltinTable = R"(# Canonical country names
ALBANIA
ALGERIA
ARGENTINA
ARMENIA
AUSTRALIA
AUSTRIA
AZERBAIJAN
BANGLADESH
BELARUS
BELGIUM
BOLIVIA
BOTSWANA
BRAZIL
BULGARIA
CAMBODIA
CAMEROON
CANADA
CHILE
CHINA
COLOMBIA
COSTA RICA
CROATIA
CUBA
CYPRUS
CZECH REPUBLIC
DENMARK
DOMINICAN REPUBLIC
ECUADOR
EGYPT
EL SALVADOR
ESTONIA
ETHIOPIA
FIJI
FINLAND
FRANCE
GEORGIA
GERMANY
GHANA
GREECE
GUATEMALA
HONDURAS
HUNGARY
ICELAND
INDIA
INDONESIA
IRAN
IRAQ
IRELAND
ISRAEL
ITALY
JAMAICA
JAPAN
JORDAN
KAZAKHSTAN
KENYA
KUWAIT
LATVIA
LEBANON
LIBYA
LITHUANIA
LUXEMBOURG
MALAYSIA
MALTA
MEXICO
MOLDOVA
MONACO
MONGOLIA
MOROCCO
MYANMAR
NAMIBIA
NEPAL
NETHERLANDS
NEW ZEALAND
NICARAGUA
NIGERIA
NORTH KOREA
NORWAY
PAKISTAN
PANAMA
PARAGUAY
PERU
PHILIPPINES
POLAND
PORTUGAL
QATAR
ROMANIA
RUSSIA
SAUDI ARABIA
SENEGAL
SERBIA
SINGAPORE
SLOVAKIA
SLOVENIA
SOUTH AFRICA
SOUTH KOREA
SPAIN
SRI LANKA
SUDAN
SWEDEN
SWITZERLAND
TAIWAN
TANZANIA
THAILAND
TUNISIA
TURKEY
UGANDA
UKRAINE
UNITED ARAB EMIRATES
UNITED KINGDOM
URUGUAY
USA
VENEZUELA
VIETNAM
ZAMBIA
ZIMBABWE

# Aliases
ENGLAND = UNITED KINGDOM
SCOTLAND = UNITED KINGDOM
WALES = UNITED KINGDOM
NORTH IRELAND = UNITED KINGDOM
NORTHERN IRELAND = UNITED KINGDOM
UK = UNITED KINGDOM
GREAT BRITAIN = UNITED KINGDOM
PEOPLES R CHINA = CHINA
PR CHINA = CHINA
GREENLAND = DENMARK
FAROE ISLANDS = DENMARK
SVALBARD = NORWAY
RUSSIAN FEDERATION = RUSSIA
USSR = RUSSIA
FED REP GER = GERMANY
WEST GERMANY = GERMANY
HOLLAND = NETHERLANDS
CZECHIA = CZECH REPUBLIC
REPUBLIC OF KOREA = SOUTH KOREA
U ARAB EMIRATES = UNITED ARAB EMIRATES
)";

std::string canonical_token(std::string_view raw) {
  std::string t = text::collapse_ws(raw);
  while (!t.empty() && (t.back() == '.' || text::is_space(t.back()))) t.pop_back();
  return text::to_upper(t);
}

}  // namespace

const CountryTable& CountryTable::builtin() {
  static const CountryTable table = from_text(kBuiltinTable);
  return table;
}

CountryTable CountryTable::from_text(std::string_view content) {
  CountryTable table;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= content.size(); ++i) {
    if (i != content.size() && content[i] != '\n') continue;
    std::string_view line = content.substr(start, i - start);
    start = i + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::string trimmed = text::trim(line);
    if (trimmed.empty()) continue;
    if (auto eq = trimmed.find('='); eq != std::string::npos) {
      std::string alias = canonical_token(trimmed.substr(0, eq));
      std::string target = canonical_token(trimmed.substr(eq + 1));
      if (alias.empty() || target.empty())
        throw Error("bad alias line in country table: " + trimmed);
      table.aliases_[alias] = target;
    } else {
      table.canonical_.insert(canonical_token(trimmed));
    }
  }
  // Aliases must point at canonical names.
  for (const auto& [alias, target] : table.aliases_)
    if (!table.canonical_.count(target))
      throw Error("country alias target not canonical: " + target);
  return table;
}

CountryTable CountryTable::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error("cannot open country table: " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_text(buf.str());
}

bool CountryTable::is_canonical(std::string_view name) const {
  return canonical_.count(name) > 0;
}

std::string CountryTable::resolve(std::string_view address_segment, bool* known) const {
  if (known) *known = true;
  std::string segment(address_segment);
  // Drop a leading bracketed author group if present.
  if (!segment.empty() && segment.front() == '[') {
    if (auto close = segment.find(']'); close != std::string::npos)
      segment.erase(0, close + 1);
  }
  auto parts = text::split_trim(segment, ',');
  if (parts.empty()) {
    if (known) *known = false;
    return kUnresolved;
  }
  std::string token = canonical_token(parts.back());
  if (canonical_.count(token)) return token;
  if (auto it = aliases_.find(token); it != aliases_.end()) return it->second;
  // US addresses end in "<STATE> <ZIP> USA".
  if (token.size() > 4 && token.ends_with(" USA")) return "USA";
  if (known) *known = false;
  return kUnresolved;
}

}  // namespace biblio
