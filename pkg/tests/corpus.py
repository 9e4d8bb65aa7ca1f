"""Fixture corpus for round-trip and pipeline tests.

Plain prose, abbreviation traps, decimals, Unicode accents, and characters
hostile to Markdown/HTML escaping. None of the documents contain ANSI escape
characters (the ANSI strip oracle assumes that).
"""

PLAIN_PROSE = [
    "Hello world. Bye.",
    "The quick brown fox jumps over the lazy dog. It never looks back.",
    "Reading is a skill. Practice makes it faster. Comprehension matters most.",
    "She opened the book. The first page was blank. The second held a map.",
    "Rain fell all night. By morning the river had risen. Nobody crossed the bridge.",
    "He wrote a letter. He never sent it.",
    "Music filled the hall. The audience fell silent. Then came the applause.",
    "One sentence only, no terminator at all",
    "Short. Shorter. Shortest.",
    "A plan was made. A plan was followed. A plan succeeded at last.",
    "The committee met on Tuesday. They argued for hours. Nothing was decided.",
    "Stars appeared one by one. The sky turned deep violet. Night settled in.",
    "Wait! Stop right there! Who goes first?",
    "Is it ready? Yes. Ship it today.",
    "The engine hummed. The wheels turned. The train left the station on time.",
]

ABBREVIATIONS = [
    "Dr. Smith went home. He slept.",
    "Mr. and Mrs. Lee arrived early. Prof. Chan was late.",
    "The firm was Acme Inc. before the merger. Now it trades as Acme Ltd.",
    "See fig. 4 for details. The trend is clear.",
    "Compare apples vs. oranges. Both are fruit.",
    "Results improved, e.g. recall rose sharply. Precision held steady.",
    "The method is simple, i.e. count the words. Nothing more is needed.",
    "Bring pens, paper, etc. to the exam. Arrive before nine.",
    "St. Mary's stands on the hill. Pilgrims visit in spring.",
    "Lee et al. published first. Replication followed a year later.",
    "Johann S. Bach composed daily. His output was immense.",
    "Mt. Roland dominates the valley. Climbers start before dawn.",
]

DECIMALS = [
    "Pi is 3.14 exactly.",
    "Pi is roughly 3.14159 in most uses. Engineers round it further.",
    "The share price hit 12.50 yesterday. Today it fell to 11.75.",
    "Version 2.0 shipped in May. Version 2.1 fixed the regressions.",
    "He ran 5.2 km before breakfast. After lunch he ran 10 more.",
    "The sample weighed 0.75 grams. The scale reads to 0.01 grams.",
    "Inflation reached 4.8 percent. Wages rose 2.1 percent.",
    "He scored 3. Then he left the arena.",
]

UNICODE_ACCENTS = [
    "The naïve approach failed. A better plan emerged.",
    "The naïve reviewer approved it anyway.",
    "Café au lait costs three euros. The croissant costs two.",
    "Zürich is cold in January. Genève is milder.",
    "El niño llegó temprano. Todos lo celebraron.",
    "Der Straßenbahnfahrer wartete. Niemand stieg ein.",
    "Résumés pile up quickly. Few get a second read.",
    "Søren cycled to Århus. The wind was against him.",
    "Émile wrote all night. À minuit, il dormait.",
]

MARKDOWN_HOSTILE = [
    "Use *stars* sparingly. They lose their force.",
    "The file is named data_final_v2. Rename it soon.",
    "A backslash \\ ends no sentence. It only escapes.",
    "Brackets [like these] confuse parsers. Test them anyway.",
    "Use **bold** markers with care. Some renderers disagree.",
    "The `code` span stays literal. The prose around it flows.",
    "Under_scores_join_words here. Spaces separate them there.",
    "Asterisk * alone. Underscore _ alone. Backtick ` alone.",
]

HTML_HOSTILE = [
    "A test of a<b and c>d comparisons. Both hold.",
    "Tags like <em>this</em> stay text. Nothing renders them.",
    "Quotes \"double\" and 'single' both appear. Escaping covers them.",
    "Ampersands & ampersands && everywhere. Fish & chips for two.",
    "The x < y < z chain holds. So does z > y > x.",
]

STRUCTURE_AND_PUNCTUATION = [
    "He said \"Stop!\" Then he left.",
    "Wait… What happened here?",
    "It trailed off... Then it resumed sharply.",
    "A well-known author spoke. Her co-author listened.",
    "Don't panic. It's only a test. They're watching closely.",
    "The rock-hard crust resisted. A diamond-tipped drill won.",
    "Lines break\nacross the page. Tabs\tindent the rest.",
    "Numbers like 42% appear raw. Symbols #, @, and ~ follow.",
    "(Parentheses wrap asides.) [Brackets wrap the rest.]",
    "One! Two! Three! Go now.",
    "First line.\n\nSecond paragraph starts here. It continues on.",
    "  Leading spaces survive. Trailing ones do too.  ",
]

DOCUMENTS = (
    PLAIN_PROSE
    + ABBREVIATIONS
    + DECIMALS
    + UNICODE_ACCENTS
    + MARKDOWN_HOSTILE
    + HTML_HOSTILE
    + STRUCTURE_AND_PUNCTUATION
)

assert len(DOCUMENTS) >= 50, len(DOCUMENTS)
