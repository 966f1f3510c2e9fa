"""Generation-target passages and the question sets behind the demo
cassette. The questions simulate model output for each (passage, type)
request; like real output, not every question is a clean example of the
type it was requested for.
"""

TARGET_PASSAGES = [
    {
        "id": "t01",
        "title": "Lighthouses",
        "body": (
            "A lighthouse is a tall tower built beside dangerous waters. At its top burns a powerful "
            "lamp that flashes through the night. Sailors far from shore watch for that light. It "
            "warns them of rocks, reefs, and shallow water hiding near the coast.\n\n"
            "Each lighthouse flashes in its own pattern, called its character. One tower may flash "
            "twice every ten seconds, while its neighbor down the coast flashes once every five. "
            "Captains compare the pattern they see with the charts they carry. The pattern tells "
            "them exactly which stretch of coast lies ahead.\n\n"
            "Before electricity, keepers lived at each lighthouse. A keeper climbed the winding "
            "stairs several times a night to trim wicks, add oil, and wind the clockwork that turned "
            "the lens. The work was lonely, especially on towers built on bare rocks far out at sea. "
            "Storms sometimes kept supply boats away for weeks.\n\n"
            "Today, machines have taken over. Electric lamps switch on at dusk, and sensors report "
            "problems by radio. Most lighthouses now stand empty, but their lights still sweep the "
            "sea every night."
        ),
    },
    {
        "id": "t02",
        "title": "The Sahara Desert",
        "body": (
            "The Sahara is the largest hot desert on Earth, nearly as big as the United States. "
            "Movies show endless waves of sand, but great sand seas cover only part of the Sahara. "
            "Most of it is bare rock and gravel.\n\n"
            "Days in the Sahara can be burning hot. The desert's air is extremely dry. After sunset, "
            "it cannot hold the day's heat, and the temperature falls fast. A traveler may sweat at "
            "noon and shiver at midnight.\n\n"
            "Scattered across the desert are oases, islands of green. At an oasis, underground water "
            "rises close to the surface, so palms and gardens can grow. Desert towns grew up around "
            "them. Camels made travel between the towns possible. A camel's hump stores fat. The "
            "animal draws on it for energy when food is scarce.\n\n"
            "The Sahara was not always dry. Thousands of years ago it was green, with rivers and "
            "lakes. Ancient artists covered cave walls with paintings. They show swimmers, cattle, "
            "and river animals. Today the desert is growing at its edges, and farmers watch the "
            "sand advance toward their fields."
        ),
    },
    {
        "id": "t03",
        "title": "Owls",
        "body": (
            "Owls are hunters of the night. Most birds make a rushing sound in flight, but an owl "
            "passes overhead in silence. The front edges of its wing feathers are soft and fringed. "
            "They break up the flowing air so that hardly any sound escapes.\n\n"
            "An owl's huge eyes are fixed in their sockets. To look around, it must turn its whole "
            "head, and some owls can turn theirs almost three quarters of a circle. The feathery "
            "tufts on some owls' heads are not ears at all. An owl's real ears sit at uneven heights "
            "on the sides of its head. They let the bird pinpoint exactly where a faint rustle comes "
            "from, even under snow or leaves.\n\n"
            "An owl swallows small prey whole. The parts it cannot digest, like bones and fur, are "
            "pressed into a pellet. The bird coughs it up hours after a meal.\n\n"
            "Farmers often welcome owls. A single barn owl family can catch thousands of mice in a "
            "year, mice that would otherwise eat the stored grain."
        ),
    },
    {
        "id": "t04",
        "title": "Recycling",
        "body": (
            "Recycling turns used materials into new ones instead of burying them in landfills. An "
            "aluminum can may be melted and rolled into a fresh can. It can return to the store "
            "shelf in about sixty days, using a small fraction of the energy needed to make new "
            "metal from ore.\n\n"
            "At a sorting plant, the mixed waste rides a conveyor belt past powerful magnets. They "
            "pull out steel cans while jets of air blow the light plastics aside. Glass is different "
            "from paper: melted glass never wears out, so a bottle can become a new bottle again and "
            "again. Paper is made of tiny fibers. Each trip through recycling cuts them shorter, so "
            "paper can only be recycled a few times.\n\n"
            "Sorting only works when the materials arrive clean. A single greasy pizza box can ruin "
            "a whole batch of clean paper.\n\n"
            "Recycling is only the third choice. Reducing what we buy and reusing what we own come "
            "first, because the cleanest energy is the energy never spent."
        ),
    },
    {
        "id": "t05",
        "title": "The Great Wall of China",
        "body": (
            "The Great Wall of China is not one wall but many. Different dynasties built separate "
            "sections over more than two thousand years. The earliest sections were simple banks of "
            "packed earth. Builders later faced them with stone and brick. Many dynasties ordered "
            "the wall rebuilt. Their workers, soldiers, farmers, and prisoners did the labor by "
            "hand.\n\n"
            "The wall did more than block raiders from the north. Merchants on the Silk Road passed "
            "through its gates, and soldiers stationed there could tax the passing trade. Watchtowers "
            "stood within sight of one another along the wall. Guards in the towers lit smoke "
            "signals by day and fires by night. The signals could pass a warning along the wall "
            "faster than any rider.\n\n"
            "A famous story claims the wall can be seen from space. Astronauts report that it "
            "cannot, at least not with the naked eye. The wall is long but narrow, and its stones "
            "are the color of the land around them.\n\n"
            "Today millions of visitors walk the restored sections every year, and their footsteps "
            "slowly wear down the ancient stones."
        ),
    },
    {
        "id": "t06",
        "title": "Glaciers",
        "body": (
            "A glacier is a river of ice. Glaciers form high in mountains and near the poles, where "
            "the winter snow outlasts the summer melt. Each winter adds a new layer of snow. Its "
            "weight presses the older layers below into solid ice.\n\n"
            "A glacier flows downhill only a few centimeters a day. As it creeps, it plucks rocks "
            "from the ground and carves wide valleys. Glaciers drag long lines of broken rock along "
            "their edges. They appear as dark stripes on the white ice. Where a glacier ends, it "
            "drops the rock in a ridge. Scientists find these ridges far from today's ice and know "
            "the glacier once reached that spot.\n\n"
            "Mountain glaciers act as frozen water towers. Their summer meltwater feeds rivers that "
            "people depend on for drinking and farming in dry months. Most of the world's glaciers "
            "are now shrinking. More ice melts each summer than the winter snow replaces."
        ),
    },
    {
        "id": "t07",
        "title": "Chocolate",
        "body": (
            "Chocolate begins as the seed of a tropical tree. The cacao tree grows large pods "
            "straight from its trunk. Inside them lie the seeds we call cacao beans. Farmers "
            "ferment the beans, dry them in the sun, and ship them to factories to be roasted and "
            "ground.\n\n"
            "The Maya and the Aztecs ground cacao beans into a bitter drink. They flavored it with "
            "chili and spices, and they valued the beans so highly that people paid with them at "
            "the market. Spanish ships later carried cacao home to Europe. Cooks there sweetened it "
            "with sugar, and the bitter drink became a fashionable treat. In 1875, a Swiss maker "
            "blended in dried milk, and milk chocolate was born.\n\n"
            "The cacao tree needs steady warmth and rain all year, so it grows only in a band near "
            "the equator. Most of the world's cacao comes from small family farms. When the price "
            "of chocolate changes, life changes on those farms as well."
        ),
    },
    {
        "id": "t08",
        "title": "Windmills",
        "body": (
            "For centuries, windmills turned the power of moving air into useful work. Wind pushes "
            "the cloth sails in a circle. They spin a long wooden shaft that runs down the center of "
            "the mill. Gears carry the spin of the shaft down to the heavy millstones, which grind "
            "grain into flour.\n\n"
            "Millers raised their mills on hills, where the wind blows steadiest. The top of the "
            "mill, called the cap, can rotate. The miller turned it whenever the wind changed "
            "direction, so the sails always faced the breeze.\n\n"
            "Much of the Netherlands lies below the level of the sea. Windmills pumped water off it "
            "for centuries, turning drowned ground into farmland. Rows of mills ran day and night to "
            "keep the fields dry.\n\n"
            "Wind still works for us, but the new mills make electricity instead of flour. Their "
            "blades stand on towers as tall as buildings, high above the trees and rooftops that "
            "slow the wind near the ground."
        ),
    },
    {
        "id": "t09",
        "title": "The Human Heart",
        "body": (
            "Your heart is a muscle about the size of your fist, and it works every moment of your "
            "life. It beats about one hundred thousand times a day, pushing blood through thousands "
            "of kilometers of vessels.\n\n"
            "The heart has four chambers, two on each side. The heart's right side collects blood "
            "returning from the body. It pumps that blood to the lungs to pick up oxygen. The left "
            "side receives the oxygen-rich blood and pushes it out to the whole body, so its walls "
            "are the thickest and strongest.\n\n"
            "Between the chambers sit small flaps called valves. They work like one-way doors, "
            "letting blood move forward but never back. They snap shut after each beat, making the "
            "'lub-dub' sound a doctor hears through a stethoscope.\n\n"
            "Blood picks up oxygen in the lungs and food from the gut. It delivers them to every "
            "corner of the body, from the brain to the smallest toe. Like any muscle, the heart "
            "grows stronger with use, which is why running and swimming are gifts to it."
        ),
    },
    {
        "id": "t10",
        "title": "Photography",
        "body": (
            "Centuries ago, people darkened a room and let light enter through a single pinhole. It "
            "painted an upside-down picture of the outside world on the far wall. Artists traced "
            "the picture, but no one could make it stay.\n\n"
            "In 1826, a French inventor finally captured a permanent photograph. It took about "
            "eight hours of light to form on a polished metal plate. Later methods cut the "
            "exposure from hours to minutes, and portrait studios opened in every city. Subjects "
            "had to hold perfectly still, which is why people in old photographs so rarely smile.\n\n"
            "In 1888, a new camera arrived already loaded with a roll of film, sold with the "
            "slogan 'You press the button, we do the rest.' Ordinary families bought the camera "
            "in crowds. They only had to mail in the camera, and the company developed the "
            "pictures and returned it loaded with fresh film.\n\n"
            "Today, film has mostly given way to electronic sensors, and nearly everyone carries a "
            "camera inside a phone. People now take more photographs in two minutes than the whole "
            "world took in the 1800s."
        ),
    },
]

# (passage_id, type_code) -> exactly 3 simulated model questions.
GENERATED_QUESTIONS = {
    ("t01", "pb"): [
        {
            "stem": "What warns sailors of rocks, reefs, and shallow water?",
            "answer": "The lighthouse's flashing lamp",
            "distractors": ["The supply boat", "The winding stairs", "The radio sensors"],
            "hint": "Sailors far from shore watch for that light. It warns them of rocks, reefs, and shallow water hiding near the coast.",
            "reasoning": "The pronoun \"It\" refers to the light named in the previous sentence, so the reader bridges the two sentences to answer.",
        },
        {
            "stem": "What tells captains exactly which stretch of coast lies ahead?",
            "answer": "The flash pattern they see",
            "distractors": ["The color of the tower", "The height of the waves", "The keeper's radio"],
            "hint": "Captains compare the pattern they see with the charts they carry. The pattern tells them exactly which stretch of coast lies ahead.",
            "reasoning": "\"them\" refers to the captains of the previous sentence; resolving it connects the pattern to the reader of the charts.",
        },
        {
            "stem": "Who climbed the stairs several times a night to tend the light?",
            "answer": "The lighthouse keeper",
            "distractors": ["A ship's captain", "A modern sensor", "A supply sailor"],
            "hint": "Before electricity, keepers lived at each lighthouse. A keeper climbed the winding stairs several times a night to trim wicks, add oil, and wind the clockwork that turned the lens.",
            "reasoning": "The second sentence continues describing the keepers introduced in the first, so the reader carries the referent across sentences.",
        },
    ],
    ("t01", "tc"): [
        {
            "stem": "Why does each lighthouse flash in its own pattern?",
            "answer": "So captains can tell which stretch of coast they are near",
            "distractors": ["To save lamp oil", "To entertain passing ships", "To signal the time of night"],
            "hint": "Each lighthouse flashes in its own pattern, called its character. The pattern tells them exactly which stretch of coast lies ahead.",
            "reasoning": "\"The pattern\" in the later sentence links back to \"its own pattern\"; connecting the two explains the purpose.",
        },
        {
            "stem": "What is a lighthouse's 'character'?",
            "answer": "Its own pattern of flashes",
            "distractors": ["The keeper's personality", "The height of its tower", "The color of its paint"],
            "hint": "Each lighthouse flashes in its own pattern, called its character.",
            "reasoning": "The phrase \"called its character\" names the pattern described in the same sentence; the reader links the term to the definition.",
        },
        {
            "stem": "Why did storms make a keeper's life harder?",
            "answer": "They kept supply boats away for weeks",
            "distractors": ["They blew out the lamp forever", "They turned the lens backward", "They flooded the charts"],
            "hint": "The work was lonely, especially on towers built on bare rocks far out at sea. Storms sometimes kept supply boats away for weeks.",
            "reasoning": "The reader connects the lonely offshore towers of the first sentence with the stranded supply boats of the second.",
        },
    ],
    ("t01", "gf"): [
        {
            "stem": "Why was a keeper's job especially lonely on towers far out at sea?",
            "answer": "Few people could reach a tower surrounded by water",
            "distractors": ["The lamp made too much noise for guests", "Keepers were forbidden to speak", "The stairs were too narrow for visitors"],
            "hint": "The work was lonely, especially on towers built on bare rocks far out at sea.",
            "reasoning": "The passage states the loneliness but not its cause; the reader fills the gap with common knowledge about isolated places.",
        },
        {
            "stem": "Why do lighthouses flash at night instead of shining only by day?",
            "answer": "Darkness hides the coast, so ships need the warning most at night",
            "distractors": ["Electricity is cheaper after dark", "Sailors sleep during the day", "The lens melts in sunlight"],
            "hint": "At its top burns a powerful lamp that flashes through the night.",
            "reasoning": "The passage never says why night matters; general knowledge that hazards are invisible in the dark completes the answer.",
        },
        {
            "stem": "What is a possible reason most lighthouses stand empty today?",
            "answer": "Machines now do the work keepers once did",
            "distractors": ["Ships no longer sail at night", "The towers are too old to enter", "Keepers moved to bigger cities"],
            "hint": "Today, machines have taken over. Electric lamps switch on at dusk, and sensors report problems by radio.",
            "reasoning": "The reader combines the stated automation with everyday knowledge about jobs replaced by machines.",
        },
    ],
    ("t02", "pb"): [
        {
            "stem": "What cannot hold the day's heat after sunset?",
            "answer": "The desert's dry air",
            "distractors": ["The gravel plains", "A camel's hump", "The oasis water"],
            "hint": "The desert's air is extremely dry. After sunset, it cannot hold the day's heat, and the temperature falls fast.",
            "reasoning": "The pronoun \"it\" refers to the dry air of the previous sentence; bridging the sentences explains the night cold.",
        },
        {
            "stem": "What does a camel draw on for energy when food is scarce?",
            "answer": "The fat stored in its hump",
            "distractors": ["Water from the oasis", "Salt from the rocks", "Heat from the sand"],
            "hint": "A camel's hump stores fat. The animal draws on it for energy when food is scarce.",
            "reasoning": "\"it\" points back to the stored fat named in the previous sentence; resolving the pronoun answers the question.",
        },
        {
            "stem": "What do the ancient cave paintings show?",
            "answer": "Swimmers, cattle, and river animals",
            "distractors": ["Endless waves of sand", "Camel caravans", "Modern desert towns"],
            "hint": "Ancient artists covered cave walls with paintings. They show swimmers, cattle, and river animals.",
            "reasoning": "The pronoun \"They\" refers to the paintings of the previous sentence, so the reader must bridge the two sentences.",
        },
    ],
    ("t02", "tc"): [
        {
            "stem": "Why can palms and gardens grow at an oasis?",
            "answer": "Underground water rises close to the surface there",
            "distractors": ["The sand is softer there", "Travelers water them daily", "Clouds gather over the palms"],
            "hint": "At an oasis, underground water rises close to the surface, so palms and gardens can grow.",
            "reasoning": "The sentence links the green oasis to the rising water; the reader connects the two stated components.",
        },
        {
            "stem": "What evidence shows the Sahara was once green?",
            "answer": "Cave paintings of swimmers and river animals",
            "distractors": ["Maps drawn by early explorers", "Frozen lakes under the sand", "Camel bones in the gravel"],
            "hint": "Thousands of years ago it was green, with rivers and lakes. Ancient artists covered cave walls with paintings. They show swimmers, cattle, and river animals.",
            "reasoning": "The reader connects the green past stated first with the painted evidence described after it.",
        },
        {
            "stem": "Why does a Sahara traveler sweat at noon and shiver at midnight?",
            "answer": "The dry air loses the day's heat quickly after sunset",
            "distractors": ["The sand turns to ice at night", "Oases cool the whole desert", "Camels crowd out the warmth"],
            "hint": "After sunset, it cannot hold the day's heat, and the temperature falls fast. A traveler may sweat at noon and shiver at midnight.",
            "reasoning": "The second sentence's extremes connect back to the heat loss explained before; linking them answers the question.",
        },
    ],
    ("t02", "gf"): [
        {
            "stem": "Why do desert travelers often prefer to move in the early morning or at night?",
            "answer": "To avoid the strongest heat of the day",
            "distractors": ["The sand glows too brightly at noon", "Camels sleep during the day", "Oases close in the afternoon"],
            "hint": "Days in the Sahara can be burning hot.",
            "reasoning": "The passage never mentions travel times; the reader combines the stated heat with common sense about avoiding it.",
        },
        {
            "stem": "Why is an oasis a natural place for a town to grow?",
            "answer": "People need a steady supply of water to live",
            "distractors": ["Towns are required to be green", "The rock is easier to carve there", "Paintings attracted tourists"],
            "hint": "Desert towns grew up around them.",
            "reasoning": "The passage states towns grew at oases but not why; general knowledge about water and settlement fills the gap.",
        },
        {
            "stem": "What is a possible reason farmers watch the advancing sand with worry?",
            "answer": "Growing desert can swallow the land they farm",
            "distractors": ["Sand makes their crops grow faster", "They collect the sand for glass", "The dunes block the sunrise"],
            "hint": "Today the desert is growing at its edges, and farmers watch the sand advance toward their fields.",
            "reasoning": "The threat is implied rather than stated; the reader infers the loss of farmland from the approaching desert.",
        },
    ],
    ("t03", "pb"): [
        {
            "stem": "What lets an owl pinpoint where a faint rustle comes from?",
            "answer": "Its ears set at uneven heights",
            "distractors": ["Its feathery head tufts", "Its fixed eyes", "Its fringed wing feathers"],
            "hint": "An owl's real ears sit at uneven heights on the sides of its head. They let the bird pinpoint exactly where a faint rustle comes from, even under snow or leaves.",
            "reasoning": "The pronoun \"They\" refers to the uneven ears in the previous sentence; the bridge identifies the ability's source.",
        },
        {
            "stem": "What does the owl cough up hours after a meal?",
            "answer": "A pellet of bones and fur",
            "distractors": ["A ball of feathers", "A stone from its stomach", "A whole mouse"],
            "hint": "The parts it cannot digest, like bones and fur, are pressed into a pellet. The bird coughs it up hours after a meal.",
            "reasoning": "\"it\" in the second sentence points back to the pellet formed in the first; resolving the pronoun answers the question.",
        },
        {
            "stem": "What do the soft, fringed feather edges break up?",
            "answer": "The flowing air around the wing",
            "distractors": ["The owl's pellets", "The moonlight", "The falling snow"],
            "hint": "The front edges of its wing feathers are soft and fringed. They break up the flowing air so that hardly any sound escapes.",
            "reasoning": "\"They\" refers to the fringed feather edges of the previous sentence; bridging the sentences explains the silence.",
        },
    ],
    ("t03", "tc"): [
        {
            "stem": "How does an owl look around without moving its eyes?",
            "answer": "It turns its whole head, up to three quarters of a circle",
            "distractors": ["It blinks very quickly", "It flies in tight circles", "It listens instead of looking"],
            "hint": "An owl's huge eyes are fixed in their sockets. To look around, it must turn its whole head, and some owls can turn theirs almost three quarters of a circle.",
            "reasoning": "The fixed eyes and the turning head are stated in neighboring sentences; connecting them explains the owl's trick.",
        },
        {
            "stem": "Why do farmers welcome a barn owl family?",
            "answer": "The owls catch mice that would eat the stored grain",
            "distractors": ["The owls guard against burglars", "The owls sing at sunrise", "The owls spread seeds"],
            "hint": "A single barn owl family can catch thousands of mice in a year, mice that would otherwise eat the stored grain.",
            "reasoning": "The reader connects the caught mice with the protected grain; the repeated noun \"mice\" bridges the two statements.",
        },
        {
            "stem": "Why is an owl silent in flight while most birds are not?",
            "answer": "Its soft, fringed feather edges break up the rushing air",
            "distractors": ["It flies much more slowly", "It only glides downhill", "Its wings are smaller than other birds'"],
            "hint": "Most birds make a rushing sound in flight, but an owl passes overhead in silence. The front edges of its wing feathers are soft and fringed.",
            "reasoning": "The reader connects the stated silence with the feather structure described in the next sentences.",
        },
    ],
    ("t03", "gf"): [
        {
            "stem": "Why is silent flight useful to a night hunter?",
            "answer": "Prey cannot hear the owl coming",
            "distractors": ["Silence keeps the owl warm", "Noise would wake other owls", "Quiet wings use no energy"],
            "hint": "Owls are hunters of the night. Most birds make a rushing sound in flight, but an owl passes overhead in silence.",
            "reasoning": "The passage never says why silence helps; the reader supplies the common knowledge that quiet hunters surprise their prey.",
        },
        {
            "stem": "Why might a scientist pick apart an owl pellet?",
            "answer": "The bones inside show what the owl has eaten",
            "distractors": ["Pellets predict the weather", "Pellets contain seeds to plant", "Pellets glow in the dark"],
            "hint": "The parts it cannot digest, like bones and fur, are pressed into a pellet.",
            "reasoning": "The passage says pellets hold bones; the reader infers their scientific value from general knowledge about studying diets.",
        },
        {
            "stem": "What is a possible reason owls hunt at night rather than by day?",
            "answer": "Darkness hides them while many small animals are active",
            "distractors": ["The sun hurts their feathers", "Mice are too fast in daylight", "Farmers only allow night hunting"],
            "hint": "Owls are hunters of the night.",
            "reasoning": "The passage states the habit without the reason; the reader fills the gap with knowledge of nocturnal animals.",
        },
    ],
    ("t04", "pb"): [
        {
            "stem": "What can return to the store shelf in about sixty days?",
            "answer": "A recycled aluminum can",
            "distractors": ["A greasy pizza box", "A glass bottle", "A paper bag"],
            "hint": "An aluminum can may be melted and rolled into a fresh can. It can return to the store shelf in about sixty days, using a small fraction of the energy needed to make new metal from ore.",
            "reasoning": "The pronoun \"It\" refers to the fresh can of the previous sentence; bridging the sentences answers the question.",
        },
        {
            "stem": "What do the powerful magnets pull out of the waste stream?",
            "answer": "Steel cans",
            "distractors": ["Light plastics", "Glass bottles", "Paper fibers"],
            "hint": "The mixed waste rides a conveyor belt past powerful magnets. They pull out steel cans while jets of air blow the light plastics aside.",
            "reasoning": "\"They\" refers to the magnets in the previous sentence; resolving the pronoun identifies what does the pulling.",
        },
        {
            "stem": "What gets cut shorter on each trip through recycling?",
            "answer": "Paper's tiny fibers",
            "distractors": ["Aluminum sheets", "Glass shards", "Steel strips"],
            "hint": "Paper is made of tiny fibers. Each trip through recycling cuts them shorter, so paper can only be recycled a few times.",
            "reasoning": "The pronoun \"them\" points back to the fibers of the previous sentence; the bridge explains paper's limit.",
        },
    ],
    ("t04", "tc"): [
        {
            "stem": "Why can a glass bottle be recycled again and again?",
            "answer": "Melted glass never wears out",
            "distractors": ["Glass is lighter than paper", "Bottles are easy to wash", "Glass floats past the magnets"],
            "hint": "Glass is different from paper: melted glass never wears out, so a bottle can become a new bottle again and again.",
            "reasoning": "The reader links the endless bottle with the stated property of melted glass; the two components sit in one chain.",
        },
        {
            "stem": "Why does one greasy pizza box cause so much trouble?",
            "answer": "It can ruin a whole batch of clean paper",
            "distractors": ["It jams the conveyor belt", "It attracts the magnets", "It melts in the sorting plant"],
            "hint": "Sorting only works when the materials arrive clean. A single greasy pizza box can ruin a whole batch of clean paper.",
            "reasoning": "The reader connects the cleanliness rule with the example that follows it; the second sentence completes the first.",
        },
        {
            "stem": "How does recycling an aluminum can save energy?",
            "answer": "Melting a used can takes far less energy than making new metal from ore",
            "distractors": ["Cans are carried by hand", "The sorting plant runs on sunlight", "Recycled cans are smaller"],
            "hint": "It can return to the store shelf in about sixty days, using a small fraction and of the energy needed to make new metal from ore.",
            "reasoning": "The reader connects the recycled can to the stated energy comparison with ore.",
        },
    ],
    ("t04", "gf"): [
        {
            "stem": "Why is reusing a jar even better than recycling it?",
            "answer": "Reuse skips the energy needed to melt and remake it",
            "distractors": ["Jars grow stronger with age", "Recycled jars cannot hold food", "Reused jars look newer"],
            "hint": "Reducing what we buy and reusing what we own come first, because the cleanest energy is the energy never spent.",
            "reasoning": "The ranking is stated but not explained for jars; the reader fills in that reuse avoids the remaking step entirely.",
        },
        {
            "stem": "Why should people rinse containers before recycling them?",
            "answer": "Leftover food can spoil the other collected materials",
            "distractors": ["Wet containers weigh more", "Clean containers are worth money", "The plant has no water supply"],
            "hint": "Sorting only works when the materials arrive clean.",
            "reasoning": "The passage gives the rule; the reader applies it with common knowledge about food waste contaminating a bin.",
        },
        {
            "stem": "What is a possible reason jets of air can sort the plastics?",
            "answer": "Plastics are light enough for air to push aside",
            "distractors": ["Plastics are magnetic", "Air melts the plastic", "Plastics are the largest items"],
            "hint": "They pull out steel cans while jets of air blow the light plastics aside.",
            "reasoning": "The passage shows the method; the reader infers from everyday knowledge that only light things can be blown off a belt.",
        },
    ],
    ("t05", "pb"): [
        {
            "stem": "What could pass a warning along the wall faster than any rider?",
            "answer": "The smoke and fire signals",
            "distractors": ["The merchants' carts", "The stone ramparts", "The prisoners' chains"],
            "hint": "Guards in the towers lit smoke signals by day and fires by night. The signals could pass a warning along the wall faster than any rider.",
            "reasoning": "The second sentence's subject refers back to the smoke and fire of the first; the reader bridges to identify the signals.",
        },
        {
            "stem": "What did builders later face with stone and brick?",
            "answer": "The early banks of packed earth",
            "distractors": ["The watchtowers' roofs", "The Silk Road gates", "The restored tourist paths"],
            "hint": "The earliest sections were simple banks of packed earth. Builders later faced them with stone and brick.",
            "reasoning": "The pronoun \"them\" refers to the packed-earth banks in the previous sentence; resolving it answers the question.",
        },
        {
            "stem": "Whose workers, soldiers, farmers, and prisoners built the wall by hand?",
            "answer": "The many dynasties that ordered it rebuilt",
            "distractors": ["The foreign merchants", "The modern visitors", "The astronauts"],
            "hint": "Many dynasties ordered the wall rebuilt. Their workers, soldiers, farmers, and prisoners did the labor by hand.",
            "reasoning": "\"Their\" points back to the dynasties of the previous sentence; the bridge identifies whose people labored.",
        },
    ],
    ("t05", "tc"): [
        {
            "stem": "How did the wall help China profit from the Silk Road?",
            "answer": "Soldiers at its gates could tax the passing trade",
            "distractors": ["The wall sold its own silk", "Merchants paid to climb the towers", "The wall stored trade goods"],
            "hint": "Merchants on the Silk Road passed through its gates, and soldiers stationed there could tax the passing trade.",
            "reasoning": "The reader connects the passing merchants with the taxing soldiers; the gates link the two stated facts.",
        },
        {
            "stem": "Why were watchtowers built within sight of one another?",
            "answer": "So a signal could be seen and passed down the line",
            "distractors": ["So guards could share meals", "To please the emperor's eye", "To shade the wall from sun"],
            "hint": "Watchtowers stood within sight of one another along the wall. Guards in the towers lit smoke signals by day and fires by night.",
            "reasoning": "The spacing of the towers connects to the signals the guards lit; joining the sentences explains the design.",
        },
        {
            "stem": "Why is the Great Wall described as 'not one wall but many'?",
            "answer": "Different dynasties built separate sections over two thousand years",
            "distractors": ["It has many gates", "Each tower counts as a wall", "Tourists walk in many lines"],
            "hint": "The Great Wall of China is not one wall but many. Different dynasties built separate sections over more than two thousand years.",
            "reasoning": "The second sentence explains the claim of the first; the reader connects the claim with its stated reason.",
        },
    ],
    ("t05", "gf"): [
        {
            "stem": "Why did guards switch from smoke to fire at night?",
            "answer": "Smoke is hard to see in the dark, but flames glow",
            "distractors": ["Fire was cheaper than smoke", "Smoke would wake the soldiers", "Night winds blew the fires out"],
            "hint": "Guards in the towers lit smoke signals by day and fires by night.",
            "reasoning": "The passage gives the schedule but not the reason; the reader supplies the common knowledge about visibility.",
        },
        {
            "stem": "What is a possible reason the space-visibility story spread so widely?",
            "answer": "People enjoy repeating surprising claims without checking them",
            "distractors": ["Astronauts wrote it in reports", "The wall glows at night", "Teachers were ordered to tell it"],
            "hint": "A famous story claims the wall can be seen from space. Astronauts report that it cannot, at least not with the naked eye.",
            "reasoning": "The passage contrasts the story with the truth; why the myth persists is filled in from general knowledge about rumors.",
        },
        {
            "stem": "Why do millions of footsteps threaten the ancient stones?",
            "answer": "Constant wear slowly grinds old structures down",
            "distractors": ["Footsteps attract lightning", "Visitors carry stones home as gifts", "Shoes stain the stone black"],
            "hint": "Today millions of visitors walk the restored sections every year, and their footsteps slowly wear down the ancient stones.",
            "reasoning": "The passage states the wear; the reader uses general knowledge about erosion from repeated use to grasp the threat.",
        },
    ],
    ("t06", "pb"): [
        {
            "stem": "What presses the older layers of snow into solid ice?",
            "answer": "The weight of each winter's new snow",
            "distractors": ["The summer sun", "The valley rocks", "The river meltwater"],
            "hint": "Each winter adds a new layer of snow. Its weight presses the older layers below into solid ice.",
            "reasoning": "The pronoun \"Its\" refers to the new snow layer of the previous sentence; bridging the sentences explains the pressing.",
        },
        {
            "stem": "What plucks rocks from the ground and carves wide valleys?",
            "answer": "The creeping glacier",
            "distractors": ["The summer flood", "The mountain wind", "The falling snow"],
            "hint": "A glacier flows downhill only a few centimeters a day. As it creeps, it plucks rocks from the ground and carves wide valleys.",
            "reasoning": "The pronoun \"it\" refers to the slowly flowing glacier in the previous sentence; resolving it answers the question.",
        },
        {
            "stem": "What appears as dark stripes on the white ice?",
            "answer": "The lines of broken rock the glacier drags",
            "distractors": ["Shadows of the clouds", "Frozen rivers", "Trails left by climbers"],
            "hint": "Glaciers drag long lines of broken rock along their edges. They appear as dark stripes on the white ice.",
            "reasoning": "\"They\" refers to the rock lines in the previous sentence; the reader bridges the sentences to identify the stripes.",
        },
    ],
    ("t06", "tc"): [
        {
            "stem": "Where do glaciers form?",
            "answer": "Where the winter snow outlasts the summer melt",
            "distractors": ["Wherever rivers freeze", "Only at the South Pole", "On any tall building"],
            "hint": "Glaciers form high in mountains and near the poles, where the winter snow outlasts the summer melt.",
            "reasoning": "The location and the snow condition are stated together; the reader connects the two parts of the description.",
        },
        {
            "stem": "Why do farmers far from the mountains depend on glaciers?",
            "answer": "Glacier meltwater feeds the rivers they use in dry months",
            "distractors": ["Glaciers flatten their fields", "Ice is sold at the market", "Glaciers bring winter tourists"],
            "hint": "Mountain glaciers act as frozen water towers. Their summer meltwater feeds rivers that people depend on for drinking and farming in dry months.",
            "reasoning": "The reader links the water-tower image with the rivers and farming named in the next sentence.",
        },
        {
            "stem": "How do scientists know where a vanished glacier once ended?",
            "answer": "The ridge of dropped rock marks the old end point",
            "distractors": ["Old maps show every glacier", "The ice leaves a smell", "Rivers always start there"],
            "hint": "Where a glacier ends, it drops the rock in a ridge. Scientists find these ridges far from today's ice and know the glacier once reached that spot.",
            "reasoning": "\"these ridges\" connects the scientists' evidence to the rock ridge described in the previous sentence.",
        },
    ],
    ("t06", "gf"): [
        {
            "stem": "Why does a glacier flow even though ice is solid?",
            "answer": "The enormous weight makes deep ice slowly bend and creep",
            "distractors": ["Hidden wheels carry it", "The wind drags it downhill", "Fish tunnel beneath it"],
            "hint": "A glacier flows downhill only a few centimeters a day.",
            "reasoning": "The passage states the slow flow without explaining it; the reader fills in that great pressure makes ice behave like thick dough.",
        },
        {
            "stem": "What is a possible reason shrinking glaciers worry distant cities?",
            "answer": "Less stored ice means less river water in dry seasons",
            "distractors": ["Cities collect glacier postcards", "Shrinking ice cools the planet", "Glaciers hold the cities' electricity"],
            "hint": "Most of the world's glaciers are now shrinking. More ice melts each summer than the winter snow replaces.",
            "reasoning": "The passage states the shrinkage; the reader combines it with the earlier water-tower role to infer the downstream worry.",
        },
        {
            "stem": "Why would a warmer world make glaciers shrink?",
            "answer": "More ice melts in summer than snow replaces in winter",
            "distractors": ["Warm air freezes the snow harder", "Glaciers hide from the sun", "Rain washes the ice uphill"],
            "hint": "More ice melts each summer than the winter snow replaces.",
            "reasoning": "The reader applies the stated balance between melt and snowfall to the case of rising temperatures.",
        },
    ],
    ("t07", "pb"): [
        {
            "stem": "What did the Maya and Aztecs flavor with chili and spices?",
            "answer": "Their bitter cacao drink",
            "distractors": ["Dried milk", "Sweet pastries", "Roasted corn"],
            "hint": "The Maya and the Aztecs ground cacao beans into a bitter drink. They flavored it with chili and spices.",
            "reasoning": "The pronoun \"it\" refers to the bitter drink of the previous sentence; bridging the sentences answers the question.",
        },
        {
            "stem": "What lies inside the large pods of the cacao tree?",
            "answer": "The seeds we call cacao beans",
            "distractors": ["Drops of chocolate syrup", "Sweet drinking water", "Dried milk powder"],
            "hint": "The cacao tree grows large pods straight from its trunk. Inside them lie the seeds we call cacao beans.",
            "reasoning": "The pronoun \"them\" points back to the pods in the previous sentence; resolving it locates the beans.",
        },
        {
            "stem": "Who sweetened cacao with sugar?",
            "answer": "Cooks in Europe",
            "distractors": ["Aztec priests", "Swiss farmers", "The ship captains"],
            "hint": "Spanish ships later carried cacao home to Europe. Cooks there sweetened it with sugar, and the bitter drink became a fashionable treat.",
            "reasoning": "The word \"there\" refers to Europe in the previous sentence; the reader bridges the two sentences to place the cooks.",
        },
    ],
    ("t07", "tc"): [
        {
            "stem": "How were cacao beans used at Aztec markets?",
            "answer": "People paid with the beans themselves",
            "distractors": ["Beans were burned for light", "Beans decorated the stalls", "Beans fed the market animals"],
            "hint": "They flavored it with chili and spices, and they valued the beans so highly that people paid with them at the market.",
            "reasoning": "The reader connects the beans' high value with the paying at market stated in the same breath.",
        },
        {
            "stem": "Why does cacao grow only in a band near the equator?",
            "answer": "The tree needs steady warmth and rain all year",
            "distractors": ["Only equator soil is brown", "Ships cannot sail farther", "The beans melt elsewhere"],
            "hint": "The cacao tree needs steady warmth and rain all year, so it grows only in a band near the equator.",
            "reasoning": "The sentence ties the tree's needs to its range; the reader connects the two stated components.",
        },
        {
            "stem": "What new ingredient created milk chocolate in 1875?",
            "answer": "Dried milk blended into the chocolate",
            "distractors": ["Sea salt", "Chili pepper", "Olive oil"],
            "hint": "In 1875, a Swiss maker blended in dried milk, and milk chocolate was born.",
            "reasoning": "The reader links the blending of dried milk with the birth of milk chocolate in the same sentence.",
        },
    ],
    ("t07", "gf"): [
        {
            "stem": "Why must the beans be dried before the long journey to the factory?",
            "answer": "Damp seeds would spoil on the way",
            "distractors": ["Dry beans are prettier", "Wet beans are too heavy to lift", "Factories have no sunshine"],
            "hint": "Farmers ferment the beans, dry them in the sun, and ship them to factories to be roasted and ground.",
            "reasoning": "The passage lists the steps without reasons; the reader supplies the common knowledge that damp food rots in transit.",
        },
        {
            "stem": "What is a possible reason milk chocolate became so popular?",
            "answer": "Milk and sugar soften the bitter taste of cacao",
            "distractors": ["Milk makes chocolate cheaper to ship", "The Swiss gave it away", "Bitter foods were banned"],
            "hint": "Cooks there sweetened it with sugar, and the bitter drink became a fashionable treat. In 1875, a Swiss maker blended in dried milk, and milk chocolate was born.",
            "reasoning": "The passage never says why the additions pleased people; the reader fills in the preference for sweet, mild flavors.",
        },
        {
            "stem": "Why might a change in chocolate prices change life on cacao farms?",
            "answer": "The farm families depend on the money their beans bring in",
            "distractors": ["Farmers eat only chocolate", "Prices change the weather", "Cheap chocolate melts faster"],
            "hint": "Most of the world's cacao comes from small family farms. When the price of chocolate changes, life changes on those farms as well.",
            "reasoning": "The link is stated loosely; the reader fills in that small farms live on crop income, so prices shape their lives.",
        },
    ],
    ("t08", "pb"): [
        {
            "stem": "What do the wind-pushed sails spin?",
            "answer": "A long wooden shaft in the mill's center",
            "distractors": ["The heavy millstones directly", "The miller's cap", "The water pump's hose"],
            "hint": "Wind pushes the cloth sails in a circle. They spin a long wooden shaft that runs down the center of the mill.",
            "reasoning": "The pronoun \"They\" refers to the sails of the previous sentence; the bridge identifies what spins the shaft.",
        },
        {
            "stem": "What did windmills pump water off for centuries?",
            "answer": "Dutch land lying below sea level",
            "distractors": ["The tops of the hills", "The flour in the mill", "The ships in the harbor"],
            "hint": "Much of the Netherlands lies below the level of the sea. Windmills pumped water off it for centuries, turning drowned ground into farmland.",
            "reasoning": "The pronoun \"it\" refers to the low-lying land of the previous sentence; resolving it answers the question.",
        },
        {
            "stem": "What did the miller turn whenever the wind changed direction?",
            "answer": "The mill's rotating cap",
            "distractors": ["The millstones", "The sacks of flour", "The tower itself"],
            "hint": "The top of the mill, called the cap, can rotate. The miller turned it whenever the wind changed direction, so the sails always faced the breeze.",
            "reasoning": "The pronoun \"it\" points back to the cap named in the previous sentence; the bridge identifies what was turned.",
        },
    ],
    ("t08", "tc"): [
        {
            "stem": "How does the spin of the sails reach the millstones?",
            "answer": "Gears carry the shaft's spin down to the stones",
            "distractors": ["Ropes pull the stones in circles", "The wind blows on the stones directly", "The miller turns the stones by hand"],
            "hint": "They spin a long wooden shaft that runs down the center of the mill. Gears carry the spin of the shaft down to the heavy millstones, which grind grain into flour.",
            "reasoning": "The reader connects the shaft of one sentence with the gears of the next to trace the power path.",
        },
        {
            "stem": "Why did millers raise their mills on hills?",
            "answer": "The wind blows steadiest on high ground",
            "distractors": ["Hills kept the flour dry", "Farmers lived in the valleys", "Stones roll uphill easily"],
            "hint": "Millers raised their mills on hills, where the wind blows steadiest.",
            "reasoning": "The location and the reason are stated together; the reader connects the hilltop with the steady wind.",
        },
        {
            "stem": "What do the new wind machines make instead of flour?",
            "answer": "Electricity",
            "distractors": ["Drinking water", "Cloth sails", "Bread"],
            "hint": "Wind still works for us, but the new mills make electricity instead of flour.",
            "reasoning": "The sentence contrasts old and new products; the reader connects the two stated components of the comparison.",
        },
    ],
    ("t08", "gf"): [
        {
            "stem": "Why did the mill stop grinding if the sails faced away from the wind?",
            "answer": "Sails catch no push unless the wind strikes them",
            "distractors": ["The flour ran out", "The cap locked the door", "Facing away doubles the speed"],
            "hint": "The miller turned it whenever the wind changed direction, so the sails always faced the breeze.",
            "reasoning": "The passage shows the fix but not the physics; the reader supplies the everyday knowledge of catching wind.",
        },
        {
            "stem": "What is a possible reason turbine blades stand on such tall towers?",
            "answer": "Wind near the ground is slowed by trees and rooftops",
            "distractors": ["Tall towers are cheaper", "Birds fly only near the ground", "The blades must touch the clouds"],
            "hint": "Their blades stand on towers as tall as buildings, high above the trees and rooftops that slow the wind near the ground.",
            "reasoning": "The height is explained only in passing; the reader completes the logic that steady wind lives above obstacles.",
        },
        {
            "stem": "Why was keeping the fields dry worth running mills day and night?",
            "answer": "Low fields flood and ruin crops unless water is removed",
            "distractors": ["Wet fields attract sea birds", "Dry fields need no farmers", "The mills enjoyed the work"],
            "hint": "Windmills pumped water off it for centuries, turning drowned ground into farmland. Rows of mills ran day and night to keep the fields dry.",
            "reasoning": "The stakes are implied; the reader uses general knowledge that farmland below sea level floods without constant pumping.",
        },
    ],
    ("t09", "pb"): [
        {
            "stem": "What snaps shut to make the 'lub-dub' a doctor hears?",
            "answer": "The heart's valves",
            "distractors": ["The lungs' air sacs", "The rib bones", "The stethoscope's tubes"],
            "hint": "Between the chambers sit small flaps called valves. They snap shut after each beat, making the 'lub-dub' sound a doctor hears through a stethoscope.",
            "reasoning": "The pronoun \"They\" refers to the valves introduced in the previous sentence; bridging the sentences identifies the sound's source.",
        },
        {
            "stem": "Where does the heart's right side pump the blood it collects?",
            "answer": "To the lungs to pick up oxygen",
            "distractors": ["To the smallest toe", "Back to the gut", "Into the left arm only"],
            "hint": "The heart's right side collects blood returning from the body. It pumps that blood to the lungs to pick up oxygen.",
            "reasoning": "The pronoun \"It\" refers to the right side named before; resolving it tells where the blood goes.",
        },
        {
            "stem": "What does the blood deliver to every corner of the body?",
            "answer": "Oxygen and food",
            "distractors": ["Sound and warmth", "Water and salt only", "Air bubbles"],
            "hint": "Blood picks up oxygen in the lungs and food from the gut. It delivers them to every corner of the body, from the brain to the smallest toe.",
            "reasoning": "The pronoun \"them\" refers to the oxygen and food of the previous sentence; the bridge lists the deliveries.",
        },
    ],
    ("t09", "tc"): [
        {
            "stem": "Why are the walls of the heart's left side the thickest?",
            "answer": "That side must push blood out to the whole body",
            "distractors": ["It holds the most valves", "It sits closest to the ribs", "It stores extra blood"],
            "hint": "The left side receives the oxygen-rich blood and pushes it out to the whole body, so its walls are the thickest and strongest.",
            "reasoning": "The reader connects the left side's whole-body job with its stated strength; the two components are linked in the text.",
        },
        {
            "stem": "What keeps blood from flowing backward between beats?",
            "answer": "The valves that work like one-way doors",
            "distractors": ["The thickness of the blood", "The pull of the lungs", "The doctor's stethoscope"],
            "hint": "They work like one-way doors, letting blood move forward but never back.",
            "reasoning": "The reader connects the one-way-door image to the valves named in the previous sentence to answer.",
        },
        {
            "stem": "Why are running and swimming called gifts to the heart?",
            "answer": "Like any muscle, the heart grows stronger with use",
            "distractors": ["They slow the heart forever", "They cool the blood", "They shrink the heart to fist size"],
            "hint": "Like any muscle, the heart grows stronger with use, which is why running and swimming are gifts to it.",
            "reasoning": "The reader links the muscle rule with the examples of exercise given in the same sentence.",
        },
    ],
    ("t09", "gf"): [
        {
            "stem": "Why does your heart beat faster when you run?",
            "answer": "Working muscles need more oxygen delivered quickly",
            "distractors": ["Running shakes the heart loose", "Fast feet pull blood downward", "The valves open wider in shoes"],
            "hint": "It delivers them to every corner of the body, from the brain to the smallest toe.",
            "reasoning": "The passage explains delivery but not exertion; the reader adds the general knowledge that exercise raises the body's demands.",
        },
        {
            "stem": "What is a possible reason a doctor listens carefully to the 'lub-dub'?",
            "answer": "A changed sound can reveal a valve problem",
            "distractors": ["The sound tells the patient's age", "Doctors enjoy the rhythm", "The sound recharges the stethoscope"],
            "hint": "They snap shut after each beat, making the 'lub-dub' sound a doctor hears through a stethoscope.",
            "reasoning": "The passage ties the sound to the valves; the reader infers that doctors use the sound to check the valves' health.",
        },
        {
            "stem": "Why can the heart never take a long rest?",
            "answer": "The body needs a constant supply of blood to stay alive",
            "distractors": ["The ribs would crush it", "Blood would freeze in the veins", "The lungs would take its job"],
            "hint": "Your heart is a muscle about the size of your fist, and it works every moment of your life.",
            "reasoning": "The passage states the constant work; the reader fills in why stopping is not survivable using general knowledge.",
        },
    ],
    ("t10", "pb"): [
        {
            "stem": "What took about eight hours of light to form?",
            "answer": "The first permanent photograph",
            "distractors": ["The pinhole room's wall", "A roll of film", "A phone picture"],
            "hint": "In 1826, a French inventor finally captured a permanent photograph. It took about eight hours of light to form on a polished metal plate.",
            "reasoning": "The pronoun \"It\" refers to the photograph of the previous sentence; bridging the sentences answers the question.",
        },
        {
            "stem": "What painted an upside-down picture on the far wall?",
            "answer": "The light entering through the pinhole",
            "distractors": ["A hired artist", "The polished metal plate", "The camera's film"],
            "hint": "Centuries ago, people darkened a room and let light enter through a single pinhole. It painted an upside-down picture of the outside world on the far wall.",
            "reasoning": "The pronoun \"It\" refers to the entering light of the previous sentence; resolving it identifies the painter.",
        },
        {
            "stem": "Who only had to mail in the camera to get their pictures?",
            "answer": "The ordinary families who bought it",
            "distractors": ["The portrait studios", "The French inventor", "The factory workers"],
            "hint": "Ordinary families bought the camera in crowds. They only had to mail in the camera, and the company developed the pictures and returned it loaded with fresh film.",
            "reasoning": "The pronoun \"They\" refers to the families of the previous sentence; the bridge identifies who mailed the camera.",
        },
    ],
    ("t10", "tc"): [
        {
            "stem": "How did later methods improve on the eight-hour photograph?",
            "answer": "They cut the exposure from hours to minutes",
            "distractors": ["They made the plates heavier", "They added color at once", "They removed the need for light"],
            "hint": "It took about eight hours of light to form on a polished metal plate. Later methods cut the exposure from hours to minutes, and portrait studios opened in every city.",
            "reasoning": "The reader connects the eight hours of the first sentence with the minutes of the second; the comparison answers the question.",
        },
        {
            "stem": "What did the slogan 'You press the button, we do the rest' promise?",
            "answer": "The company would develop the pictures for the customer",
            "distractors": ["The camera would never break", "The film was free forever", "The button took ten photos at once"],
            "hint": "In 1888, a new camera arrived already loaded with a roll of film, sold with the slogan 'You press the button, we do the rest.' They only had to mail in the camera, and the company developed the pictures and returned it loaded with fresh film.",
            "reasoning": "The reader connects the slogan with the mail-in service described after it; the second part explains the first.",
        },
        {
            "stem": "Why do people in old photographs so rarely smile?",
            "answer": "Subjects had to hold perfectly still through long exposures",
            "distractors": ["Smiling was against the law", "The plates erased smiles", "Studios forbade happiness"],
            "hint": "Subjects had to hold perfectly still, which is why people in old photographs so rarely smile.",
            "reasoning": "The stillness and the missing smiles are linked in the stated sentence; the reader connects the two components.",
        },
    ],
    ("t10", "gf"): [
        {
            "stem": "Why was the darkened room necessary for the pinhole picture?",
            "answer": "Other light would wash out the faint image",
            "distractors": ["Darkness keeps walls clean", "Artists work best at night", "The pinhole only opens in the dark"],
            "hint": "Centuries ago, people darkened a room and let light enter through a single pinhole.",
            "reasoning": "The passage describes the setup without explaining it; the reader fills in that a dim image needs darkness to be seen.",
        },
        {
            "stem": "What is a possible reason people take so many more photos today?",
            "answer": "Nearly everyone now carries a camera in a phone",
            "distractors": ["Film has become cheaper than ever", "Photos are required by law", "Cameras now take themselves"],
            "hint": "Today, film has mostly given way to electronic sensors, and nearly everyone carries a camera inside a phone.",
            "reasoning": "The passage states the phone cameras; the reader infers that constant access multiplies the pictures taken.",
        },
        {
            "stem": "Why did portrait studios spread once exposures took only minutes?",
            "answer": "Ordinary customers could now sit still long enough for a picture",
            "distractors": ["Minutes cost more than hours", "Studios no longer needed light", "Painters had all retired"],
            "hint": "Later methods cut the exposure from hours to minutes, and portrait studios opened in every city.",
            "reasoning": "The passage pairs the shorter exposure with the studio boom; the reader fills in the practicality that links them.",
        },
    ],
}
