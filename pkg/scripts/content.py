"""Authored demo corpus: training passages and items, generation-target
passages, and the per-target question sets used to synthesize the demo
cassette. Edit here, then run build_fixtures.py to regenerate artifacts.

Item entries give the correct answer and three distractors separately; the
build script derives each item's key position from a stable hash of its id
so answer keys vary without hand-tracking.
"""

TRAINING_PASSAGES = [
    {
        "id": "train-01",
        "title": "Public Transportation",
        "body": (
            "Public transportation is a system of vehicles that many people share. Buses, trains, "
            "subways, streetcars, and ferries are all kinds of public transportation. Riders pay a "
            "small fare, board the vehicle at a stop, and travel along a planned route. Because the "
            "route is fixed, riders can plan their trips around a schedule.\n\n"
            "Ships have carried passengers since prehistoric times. That is the first kind of public "
            "transportation. Long before paved roads existed, rivers and coastlines were the safest "
            "ways to move people and goods from one settlement to another. A wooden boat could carry "
            "in one trip what a whole line of walkers could not.\n\n"
            "The first public transportation on land appeared in French cities in the 1660s, when "
            "horses pulled large carriages along fixed routes for anyone who paid. The idea spread "
            "slowly. By the 1820s, a bigger horse-drawn carriage called an omnibus rolled through "
            "Paris, London, and New York. It gave ordinary workers a way to live farther from their "
            "jobs.\n\n"
            "Steam power changed everything. In 1863, London opened the world's first underground "
            "railway. Its trains were pulled by smoky steam engines. The smoke made the tunnels "
            "unpleasant, so engineers replaced them with electric trains in 1890. Electric power also "
            "made streetcars possible, and by 1900 electric streetcars carried millions of riders in "
            "cities around the world.\n\n"
            "Today, many cities try to convince drivers to leave their cars at home. Public "
            "transportation is good for the environment. When many people use the same vehicle, fewer "
            "cars are on the road. Fewer cars make less pollution. Shared rides also save energy. "
            "Moving one full bus takes far less fuel than moving forty separate cars.\n\n"
            "Public transportation also helps people who cannot drive. Children, many elderly people, "
            "and people with certain disabilities cannot drive themselves. They depend on buses and "
            "trains to reach school, work, stores, and doctors. In places with good service, a car is "
            "a choice rather than a need.\n\n"
            "Cities keep looking for ways to make shared travel faster and more comfortable. Some "
            "cities build special lanes that only buses may use. A bus in its own lane never waits in "
            "traffic. Other cities run trains all night or let riders pay with a quick tap of a card. "
            "Every improvement has the same goal: to make the shared ride an easy choice for everyone."
        ),
    },
    {
        "id": "train-02",
        "title": "Pizza",
        "body": (
            "Pizza is one of the most popular foods in the world. A basic pizza starts with a flat "
            "round of wheat dough. The baker spreads sauce over the dough, adds cheese and other "
            "toppings, and slides the pie into a very hot oven. A few minutes later, the crust is "
            "crisp at the edge and soft in the middle.\n\n"
            "Flatbreads with toppings are ancient food. Soldiers and farmers around the old "
            "Mediterranean ate rounds of bread brushed with oil and herbs. The pizza most people "
            "picture today comes from Naples, a port city in southern Italy. Neapolitan bakers sold "
            "inexpensive flatbreads with tomatoes, garlic, and cheese to workers who needed a fast "
            "meal they could eat standing up.\n\n"
            "Tomatoes reached Italy from South America in the 1500s. Many Europeans first believed "
            "the new red fruit was poisonous. It took about two hundred years for that fear to fade. "
            "Once it did, the tomato became the heart of Neapolitan cooking, and tomato sauce became "
            "the base of the classic pizza.\n\n"
            "In 1889, a baker named Raffaele Esposito made a pizza for Queen Margherita of Italy. He "
            "topped it with red tomatoes, white mozzarella, and green basil, the three colors of the "
            "Italian flag. The queen loved it, and the pizza Margherita still carries her name.\n\n"
            "Not every pizza follows the classic recipe. White pizza uses no tomato sauce, often "
            "substituting pesto or dairy products such as sour cream. Most commonly, its toppings "
            "consist only of mozzarella and ricotta cheese drizzled with olive oil and basil and "
            "garlic. Other styles pile on vegetables, cured meats, or even seafood.\n\n"
            "Pizza crossed the ocean with Italian immigrants in the late 1800s. The first pizzerias "
            "in the United States opened in New York City. For decades, pizza stayed inside Italian "
            "neighborhoods. American soldiers returning from Italy after World War II had tasted it "
            "there and wanted more. Pizzerias spread quickly after that, and frozen pizza later put "
            "the dish into home kitchens everywhere.\n\n"
            "Today, people eat about five billion pizzas every year. Styles vary from city to city: "
            "thin and foldable in New York, deep and heavy in Chicago, wood-fired and simple in "
            "Naples. The dish changes wherever it lands, which may be the secret of its success."
        ),
    },
    {
        "id": "train-03",
        "title": "Honey Bees",
        "body": (
            "A honey bee colony is one of the most organized societies in nature. A single hive can "
            "hold fifty thousand bees, and every bee has a job. The queen lays eggs. Thousands of "
            "female worker bees build the comb, guard the entrance, feed the young, and gather food. "
            "A few hundred males, called drones, live in the hive only to mate with new queens.\n\n"
            "Worker bees make honey from nectar, the sweet liquid inside flowers. A forager drinks "
            "nectar with her long tongue and stores it in a special stomach. Back at the hive, she "
            "passes the nectar to younger house bees. They spread it through the comb and fan it with "
            "their wings until most of the water dries away. The thick syrup that remains is honey. "
            "The bees seal each full cell with a wax cap, saving the food for winter.\n\n"
            "Honey is not the colony's only product. Workers squeeze thin flakes of wax from their "
            "bodies and chew them until the wax is soft enough to shape. With it they build the "
            "comb's six-sided cells. The six-sided shape is no accident. Hexagons fit together with "
            "no wasted space, so the comb stores the most honey with the least wax.\n\n"
            "Bees also tell each other where food grows. When a forager finds a rich patch of "
            "flowers, she returns home and performs a waggle dance on the comb. The angle of her "
            "dance shows the direction of the flowers, and the length of the dance shows the "
            "distance. Other foragers read the dance in the dark hive by touching the dancer.\n\n"
            "Flowers feed the bees, and the bees repay the favor. As a bee crawls through a blossom, "
            "powdery pollen sticks to her fuzzy body. She carries the pollen to the next flower, and "
            "the dusting she leaves behind lets that plant make seeds. About one third of the food "
            "people eat depends on this exchange.\n\n"
            "Beekeepers collect extra honey without harming the colony. They keep the bees in wooden "
            "boxes with removable frames. In a good summer, a strong hive makes far more honey than "
            "it needs, sometimes thirty extra kilograms. The keeper lifts out the heavy frames, spins "
            "out the honey, and returns the empty comb to be filled again."
        ),
    },
    {
        "id": "train-04",
        "title": "The Water Cycle",
        "body": (
            "The water on Earth never stops moving, and it is never used up. The same water has been "
            "traveling between the sky, the land, and the sea for billions of years. Scientists call "
            "this endless journey the water cycle.\n\n"
            "The cycle has no real beginning, but the ocean is a good place to start. The sun heats "
            "the surface of the sea. Warm water turns into an invisible gas called water vapor, which "
            "rises into the air. This change is called evaporation. Plants add vapor to the air as "
            "well. A large oak tree can release hundreds of liters of water into the sky on a hot day "
            "through tiny holes in its leaves.\n\n"
            "High above the ground, the air grows cold. The chill turns the vapor back into tiny "
            "droplets of liquid water. Millions of these droplets gather around specks of dust and "
            "form a cloud. When the droplets bump into each other, they join and grow heavier. At "
            "last they become too heavy for the air to hold. They fall as rain, or as snow if the air "
            "is cold enough. Any water that falls from the sky is called precipitation.\n\n"
            "Some rain soaks into the soil. Plant roots drink part of it, and the rest trickles down "
            "until it reaches a layer of rock it cannot pass. There the water collects in underground "
            "pools called aquifers. People dig wells to reach this hidden supply. Many towns depend "
            "on it for drinking water.\n\n"
            "Rain that does not soak in runs downhill instead. Trickles join to make streams, streams "
            "join to make rivers, and rivers carry the water back to the sea. A single drop may ride "
            "a river for weeks. When it finally reaches the ocean, the sun is waiting, and the "
            "journey starts again.\n\n"
            "The cycle explains some everyday mysteries. Puddles shrink after a storm because their "
            "water evaporates into the air. A cold glass of lemonade sweats on a summer day because "
            "vapor in the air condenses on the chilled surface. Even your breath joins the cycle: the "
            "little cloud you see on a winter morning is water vapor from your lungs condensing in "
            "the cold air."
        ),
    },
    {
        "id": "train-05",
        "title": "Volcanoes",
        "body": (
            "A volcano is an opening in the Earth's crust where melted rock, ash, and gas escape from "
            "deep underground. Far beneath the surface, rock grows so hot that it melts. This melted "
            "rock is called magma. Because magma is lighter than the solid rock around it, it slowly "
            "rises. It gathers in a space called a magma chamber. When pressure in the chamber grows "
            "too strong, the volcano erupts.\n\n"
            "Once magma pours onto the surface, scientists give it a new name: lava. Fresh lava can "
            "be hotter than one thousand degrees Celsius. Some lava is thin and runny, and it races "
            "downhill in glowing rivers. Other lava is thick and sticky, and it piles up near the "
            "opening. The shape of a volcano depends on which kind of lava it makes. Runny lava "
            "spreads far and builds wide, gently sloping mountains. Sticky lava builds steep cones "
            "that grow taller with every eruption.\n\n"
            "An eruption can also hurl ash high into the sky. The ash is not soft, like ash from a "
            "campfire. It is made of tiny sharp pieces of rock and glass. A thick ash cloud can turn "
            "day into night, stop airplanes from flying, and bury fields many kilometers away. In the "
            "year 79, ash from Mount Vesuvius buried the Roman city of Pompeii so quickly that much "
            "of the city was preserved under the gray blanket.\n\n"
            "Not all volcanoes behave alike, so scientists sort them into three groups. An active "
            "volcano has erupted recently or shows signs that it may erupt soon. A dormant volcano is "
            "quiet now but could wake again someday. An extinct volcano has not erupted for tens of "
            "thousands of years, and scientists believe it never will again.\n\n"
            "Volcanoes destroy, but they also create. Lava and ash break down into some of the "
            "richest soil on Earth, which is why farmers plant vineyards and orchards on the slopes "
            "of old volcanoes. Deep heat from volcanic rock warms water that some countries pipe into "
            "homes and power plants. Entire islands, including the islands of Hawaii, are the tops of "
            "volcanoes that grew from the sea floor, one eruption at a time."
        ),
    },
    {
        "id": "train-06",
        "title": "The Printing Press",
        "body": (
            "Before the printing press, every book in Europe was written by hand. Monks worked for "
            "months or years to copy a single volume, shaping each letter with a quill pen. "
            "Hand-copied books were so rare and costly that only churches, rulers, and the very rich "
            "owned them. A town was lucky to have a few dozen books inside its walls.\n\n"
            "Around 1440, a German goldsmith named Johannes Gutenberg changed that. He made small "
            "metal blocks, each carrying one raised letter. These blocks, called movable type, could "
            "be arranged into words, locked into a frame, coated with ink, and pressed onto paper. "
            "When the page was done, the printer broke the frame apart and reused the same letters to "
            "build the next page.\n\n"
            "Gutenberg's idea borrowed from machines people already knew. Farmers had used screw "
            "presses for centuries to crush grapes for wine and olives for oil. He rebuilt that press "
            "to push paper evenly against his inked type. His workshop could produce in a week what a "
            "monk produced in a year.\n\n"
            "The most famous book from his shop is the Gutenberg Bible, finished around 1455. About "
            "one hundred eighty copies were printed, and each one looked as regular and handsome as "
            "careful handwriting. Fewer than fifty survive today, and they are among the most "
            "valuable books in the world.\n\n"
            "Printing spread with astonishing speed. By 1500, presses operated in more than two "
            "hundred fifty European towns, and they had already produced several million books. The "
            "price of a book fell until students, merchants, and craftspeople could afford their own "
            "copies. New ideas traveled faster than ever before. Scientists could compare exact "
            "copies of the same charts, and reformers could spread their arguments to readers they "
            "would never meet.\n\n"
            "Printing changed language itself. Printers needed spellings that every reader could "
            "recognize, so the wild variety of local spellings slowly settled into standard forms. "
            "Schools multiplied because books were no longer too costly to learn from, and more "
            "people learned to read.\n\n"
            "The printing press ruled for more than five hundred years. Today, most words travel as "
            "glowing text on screens, but every web page still borrows Gutenberg's deep idea: build "
            "each message from small reusable pieces."
        ),
    },
]

# type codes: pb = pronominal_bridging, tc = text_connecting, gf = gap_filling
TRAINING_ITEMS = [
    # ----- train-01: Public Transportation (pb 4, tc 3, gf 4) -----
    {
        "passage": "train-01", "type": "pb",
        "stem": "What was the first kind of public transportation in history?",
        "answer": "Ships",
        "distractors": ["Horse-drawn carriages", "Electric streetcars", "Underground railways"],
        "hint": "Ships have carried passengers since prehistoric times. That is the first kind of public transportation.",
        "reasoning": "The pronoun \"That\" refers to \"ships\" in the previous sentence, so the reader must bridge the two sentences to answer.",
    },
    {
        "passage": "train-01", "type": "pb",
        "stem": "What did engineers replace with electric trains in 1890?",
        "answer": "The smoky steam engines",
        "distractors": ["The horse-drawn omnibuses", "The wooden boats", "The ticket machines"],
        "hint": "Its trains were pulled by smoky steam engines. The smoke made the tunnels unpleasant, so engineers replaced them with electric trains in 1890.",
        "reasoning": "The pronoun \"them\" must be resolved to the smoky steam engines of the previous sentence to know what was replaced.",
    },
    {
        "passage": "train-01", "type": "pb",
        "stem": "Who depends on buses and trains to reach school, work, stores, and doctors?",
        "answer": "People who cannot drive themselves",
        "distractors": ["City engineers", "Bus drivers", "People who own two cars"],
        "hint": "Children, many elderly people, and people with certain disabilities cannot drive themselves. They depend on buses and trains to reach school, work, stores, and doctors.",
        "reasoning": "The pronoun \"They\" points back to the people named in the previous sentence; linking the two sentences identifies who depends on buses and trains.",
    },
    {
        "passage": "train-01", "type": "pb",
        "stem": "What gave ordinary workers a way to live farther from their jobs?",
        "answer": "The omnibus",
        "distractors": ["The underground railway", "The electric streetcar", "The ferry"],
        "hint": "By the 1820s, a bigger horse-drawn carriage called an omnibus rolled through Paris, London, and New York. It gave ordinary workers a way to live farther from their jobs.",
        "reasoning": "Answering requires resolving the pronoun \"It\" to \"an omnibus\" in the sentence before.",
    },
    {
        "passage": "train-01", "type": "tc",
        "stem": "Why is public transportation good for the environment?",
        "answer": "Because it causes less pollution",
        "distractors": ["Because it is faster than driving", "Because fares are cheap", "Because buses are large"],
        "hint": "Public transportation is good for the environment. When many people use the same vehicle, fewer cars are on the road. Fewer cars make less pollution.",
        "reasoning": "\"Fewer cars\" links back to \"public transportation\" across the sentences in a causal chain, so the reader must connect the stated components.",
    },
    {
        "passage": "train-01", "type": "tc",
        "stem": "Why does a bus in a special lane arrive faster?",
        "answer": "It never waits in traffic",
        "distractors": ["It uses a stronger engine", "It carries fewer riders", "It skips every stop"],
        "hint": "Some cities build special lanes that only buses may use. A bus in its own lane never waits in traffic.",
        "reasoning": "The reader connects \"special lanes\" in the first sentence with \"its own lane\" in the second to link the lane to the time saved.",
    },
    {
        "passage": "train-01", "type": "tc",
        "stem": "Why do shared rides save energy?",
        "answer": "A full bus uses far less fuel than forty separate cars",
        "distractors": ["Buses drive more slowly than cars", "Trains run only at night", "Riders pay with cards"],
        "hint": "Shared rides also save energy. Moving one full bus takes far less fuel than moving forty separate cars.",
        "reasoning": "\"One full bus\" restates the shared ride of the previous sentence; connecting the two statements explains the energy savings.",
    },
    {
        "passage": "train-01", "type": "gf",
        "stem": "What is a possible reason early people moved goods by water instead of by land?",
        "answer": "Traveling over land was slow and difficult without roads",
        "distractors": ["Boats were invented before walking", "Rivers flowed in every direction", "Goods float better than people"],
        "hint": "Long before paved roads existed, rivers and coastlines were the safest ways to move people and goods from one settlement to another.",
        "reasoning": "The passage never states why land travel was hard; the reader uses general knowledge that travel without roads is slow and risky to fill the gap.",
    },
    {
        "passage": "train-01", "type": "gf",
        "stem": "Why were smoky engines a bigger problem underground than above ground?",
        "answer": "Smoke collected in the closed tunnels instead of blowing away",
        "distractors": ["Steam engines only worked outdoors", "Tunnels were too narrow for engines", "Underground trains had no passengers"],
        "hint": "Its trains were pulled by smoky steam engines. The smoke made the tunnels unpleasant, so engineers replaced them with electric trains in 1890.",
        "reasoning": "The text says the smoke made tunnels unpleasant; knowing that enclosed spaces trap smoke is outside knowledge that completes the explanation.",
    },
    {
        "passage": "train-01", "type": "gf",
        "stem": "Which riders would most likely benefit from trains that run all night?",
        "answer": "People who work late shifts",
        "distractors": ["Children going to morning classes", "Commuters who drive at noon", "Tourists who sleep early"],
        "hint": "Other cities run trains all night or let riders pay with a quick tap of a card.",
        "reasoning": "The passage does not say who rides at night; the reader applies common knowledge about late work schedules to fill in the missing detail.",
    },
    {
        "passage": "train-01", "type": "gf",
        "stem": "What is a possible reason cities want drivers to leave their cars at home?",
        "answer": "Too many cars cause crowded roads and dirty air",
        "distractors": ["Cities earn no money from fares", "Cars are faster than buses", "Drivers enjoy sitting in traffic"],
        "hint": "Today, many cities try to convince drivers to leave their cars at home. Public transportation is good for the environment.",
        "reasoning": "The motive is implied, not stated; general knowledge about traffic and pollution fills in why cities prefer shared rides.",
    },
    # ----- train-02: Pizza (pb 3, tc 3, gf 4) -----
    {
        "passage": "train-02", "type": "pb",
        "stem": "Who topped the queen's pizza with the three colors of the Italian flag?",
        "answer": "Raffaele Esposito",
        "distractors": ["Queen Margherita", "A New York baker", "An American soldier"],
        "hint": "In 1889, a baker named Raffaele Esposito made a pizza for Queen Margherita of Italy. He topped it with red tomatoes, white mozzarella, and green basil, the three colors of the Italian flag.",
        "reasoning": "The pronoun \"He\" in the second sentence must be traced back to the baker named in the first sentence.",
    },
    {
        "passage": "train-02", "type": "pb",
        "stem": "What had American soldiers tasted in Italy during World War II?",
        "answer": "Pizza",
        "distractors": ["Frozen dinners", "Pesto", "Sour cream"],
        "hint": "For decades, pizza stayed inside Italian neighborhoods. American soldiers returning from Italy after World War II had tasted it there and wanted more.",
        "reasoning": "The pronoun \"it\" reaches back to \"pizza\" in the previous sentence; the reader bridges the two sentences to know what the soldiers tasted.",
    },
    {
        "passage": "train-02", "type": "pb",
        "stem": "What had to happen before the tomato became the heart of Neapolitan cooking?",
        "answer": "The fear that tomatoes were poisonous had to fade",
        "distractors": ["The queen had to visit Naples", "Frozen pizza had to be invented", "Pizzerias had to open in New York"],
        "hint": "It took about two hundred years for that fear to fade. Once it did, the tomato became the heart of Neapolitan cooking, and tomato sauce became the base of the classic pizza.",
        "reasoning": "\"it did\" stands for the fading of the fear described in the previous sentence; resolving the pronoun links the two events.",
    },
    {
        "passage": "train-02", "type": "tc",
        "stem": "How did pizza first reach the United States?",
        "answer": "Italian immigrants brought it with them",
        "distractors": ["Soldiers shipped it home in boxes", "Frozen-food companies imported it", "The queen sent it as a gift"],
        "hint": "Pizza crossed the ocean with Italian immigrants in the late 1800s. The first pizzerias in the United States opened in New York City.",
        "reasoning": "The reader connects the ocean crossing in the first sentence with the opening of American pizzerias in the second; the shared topic ties the two stated facts.",
    },
    {
        "passage": "train-02", "type": "tc",
        "stem": "Which food did many Europeans first believe was poisonous?",
        "answer": "The tomato",
        "distractors": ["Mozzarella cheese", "Wheat bread", "Olive oil"],
        "hint": "Tomatoes reached Italy from South America in the 1500s. Many Europeans first believed the new red fruit was poisonous.",
        "reasoning": "\"The new red fruit\" is a noun phrase that refers back to \"tomatoes\" in the previous sentence; connecting the two phrases answers the question.",
    },
    {
        "passage": "train-02", "type": "tc",
        "stem": "Why did pizzerias spread quickly after World War II?",
        "answer": "Returning soldiers wanted the food they had tasted in Italy",
        "distractors": ["Flour became free", "Ovens were invented that year", "Naples closed its pizzerias"],
        "hint": "American soldiers returning from Italy after World War II had tasted it there and wanted more. Pizzerias spread quickly after that, and frozen pizza later put the dish into home kitchens everywhere.",
        "reasoning": "The spread of pizzerias in the second sentence connects to the soldiers' new demand stated just before; linking the two events gives the cause.",
    },
    {
        "passage": "train-02", "type": "gf",
        "stem": "What is a possible reason \"White pizza\" gets its name?",
        "answer": "It doesn't have tomato sauce",
        "distractors": ["It is baked without any cheese", "It is always served cold", "Its crust is made of rice"],
        "hint": "White pizza uses no tomato sauce, often substituting pesto or dairy products such as sour cream. Most commonly, its toppings consist only of mozzarella and ricotta cheese drizzled with olive oil and basil and garlic.",
        "reasoning": "Readers need to use common sense to fill in the gap that \"no tomato sauce\" means the color of the pizza is not red.",
    },
    {
        "passage": "train-02", "type": "gf",
        "stem": "What is a possible reason workers in Naples wanted a meal they could eat standing up?",
        "answer": "They had little time to stop working",
        "distractors": ["Chairs had not been invented yet", "Standing makes food taste better", "The law forbade sitting outdoors"],
        "hint": "Neapolitan bakers sold inexpensive flatbreads with tomatoes, garlic, and cheese to workers who needed a fast meal they could eat standing up.",
        "reasoning": "The passage never says why the meal had to be fast; the reader supplies the common knowledge that working people have short breaks.",
    },
    {
        "passage": "train-02", "type": "gf",
        "stem": "Why did Esposito most likely choose red, white, and green toppings for the queen?",
        "answer": "To honor Italy with the colors of its flag",
        "distractors": ["They were the cheapest toppings", "The queen could not eat other colors", "No other toppings existed in 1889"],
        "hint": "He topped it with red tomatoes, white mozzarella, and green basil, the three colors of the Italian flag.",
        "reasoning": "The text lists the colors and names the flag but never states the motive; honoring the country is inferred from general knowledge about flags and royalty.",
    },
    {
        "passage": "train-02", "type": "gf",
        "stem": "Why did frozen pizza help the dish reach home kitchens everywhere?",
        "answer": "Families could store it and bake it whenever they wanted",
        "distractors": ["It tasted better than fresh pizza", "It was given away without charge", "It needed no oven at all"],
        "hint": "Pizzerias spread quickly after that, and frozen pizza later put the dish into home kitchens everywhere.",
        "reasoning": "The passage states the result but not the mechanism; the reader uses general knowledge about freezers and convenience to fill in why frozen pizza spread the dish.",
    },
    # ----- train-03: Honey Bees (pb 3, tc 3, gf 4) -----
    {
        "passage": "train-03", "type": "pb",
        "stem": "Who spreads the nectar through the comb and fans it dry?",
        "answer": "The younger house bees",
        "distractors": ["The queen", "The drones", "The beekeeper"],
        "hint": "Back at the hive, she passes the nectar to younger house bees. They spread it through the comb and fan it with their wings until most of the water dries away.",
        "reasoning": "The pronoun \"They\" refers to the younger house bees in the previous sentence; the bridge identifies who does the fanning.",
    },
    {
        "passage": "train-03", "type": "pb",
        "stem": "What do worker bees use to build the comb's six-sided cells?",
        "answer": "Softened wax",
        "distractors": ["Dried nectar", "Flower pollen", "Wood from the hive box"],
        "hint": "Workers squeeze thin flakes of wax from their bodies and chew them until the wax is soft enough to shape. With it they build the comb's six-sided cells.",
        "reasoning": "\"it\" at the start of the second sentence points back to the softened wax; resolving the pronoun tells what the cells are built from.",
    },
    {
        "passage": "train-03", "type": "pb",
        "stem": "Whose dance shows the direction of the flowers?",
        "answer": "The forager who found the flowers",
        "distractors": ["The queen bee", "A drone", "The beekeeper"],
        "hint": "When a forager finds a rich patch of flowers, she returns home and performs a waggle dance on the comb. The angle of her dance shows the direction of the flowers, and the length of the dance shows the distance.",
        "reasoning": "\"her\" in the second sentence refers to the forager introduced in the first; bridging the sentences identifies the dancer.",
    },
    {
        "passage": "train-03", "type": "tc",
        "stem": "Why do bees build six-sided cells instead of round ones?",
        "answer": "Hexagons fit together without wasted space",
        "distractors": ["Six-sided cells are easier to see", "The queen orders the shape", "Round cells hold more honey"],
        "hint": "The six-sided shape is no accident. Hexagons fit together with no wasted space, so the comb stores the most honey with the least wax.",
        "reasoning": "\"Hexagons\" restates \"the six-sided shape\" from the previous sentence; connecting the two noun phrases links the shape to its advantage.",
    },
    {
        "passage": "train-03", "type": "tc",
        "stem": "How does the pollen a bee carries help plants?",
        "answer": "The dusting left on the next flower lets the plant make seeds",
        "distractors": ["It feeds the plant's roots", "It keeps hungry insects away", "It dries the flower's nectar"],
        "hint": "As a bee crawls through a blossom, powdery pollen sticks to her fuzzy body. She carries the pollen to the next flower, and the dusting she leaves behind lets that plant make seeds.",
        "reasoning": "\"The dusting\" connects back to the powdery pollen of the previous sentence; the reader links the two statements to see how seeds result.",
    },
    {
        "passage": "train-03", "type": "tc",
        "stem": "How do removable frames help beekeepers collect honey?",
        "answer": "Frames can be lifted out and the honey spun from them",
        "distractors": ["Frames scare away the bees", "Frames melt the wax caps", "Frames feed the young larvae"],
        "hint": "They keep the bees in wooden boxes with removable frames. The keeper lifts out the heavy frames, spins out the honey, and returns the empty comb to be filled again.",
        "reasoning": "\"the heavy frames\" in the second sentence connects to the removable frames of the first; joining the two sentences explains the collection method.",
    },
    {
        "passage": "train-03", "type": "gf",
        "stem": "Why does fanning the nectar turn it into thick syrup?",
        "answer": "Moving air makes the water in the nectar evaporate",
        "distractors": ["Wing beats add sugar to the nectar", "The wind pushes nectar into the cells", "Fanning keeps the queen warm"],
        "hint": "They spread it through the comb and fan it with their wings until most of the water dries away. The thick syrup that remains is honey.",
        "reasoning": "The passage says the water dries away but not why fanning helps; the reader supplies the general knowledge that moving air speeds evaporation.",
    },
    {
        "passage": "train-03", "type": "gf",
        "stem": "Why must other bees touch the dancer to read her dance?",
        "answer": "It is too dark inside the hive to see the dance",
        "distractors": ["The dancer moves too fast to watch", "Touching keeps the dancer warm", "Bees can only smell each other"],
        "hint": "Other foragers read the dance in the dark hive by touching the dancer.",
        "reasoning": "The text notes the hive is dark; the reader fills in with common sense that sight fails in darkness, so touch must replace it.",
    },
    {
        "passage": "train-03", "type": "gf",
        "stem": "Why do bees need to store food for winter?",
        "answer": "Few flowers bloom in cold months, so nectar is scarce",
        "distractors": ["Bees sleep through the summer", "Honey freezes into ice", "The queen eats all the eggs"],
        "hint": "The bees seal each full cell with a wax cap, saving the food for winter.",
        "reasoning": "The passage never explains the winter shortage; knowing that flowers disappear in winter is outside knowledge that completes the reason.",
    },
    {
        "passage": "train-03", "type": "gf",
        "stem": "What would most likely happen to some crops if honey bees disappeared?",
        "answer": "They would produce fewer seeds and fruits",
        "distractors": ["They would grow twice as fast", "They would turn into flowers", "Nothing about them would change"],
        "hint": "She carries the pollen to the next flower, and the dusting she leaves behind lets that plant make seeds. About one third of the food people eat depends on this exchange.",
        "reasoning": "The consequence of losing pollinators is not stated; the reader combines the stated dependence with general knowledge to predict the outcome.",
    },
    # ----- train-04: The Water Cycle (pb 3, tc 3, gf 4) -----
    {
        "passage": "train-04", "type": "pb",
        "stem": "What do plant roots drink part of?",
        "answer": "The rain that soaks into the soil",
        "distractors": ["The ocean's salt water", "The morning fog", "The river current"],
        "hint": "Some rain soaks into the soil. Plant roots drink part of it, and the rest trickles down until it reaches a layer of rock it cannot pass.",
        "reasoning": "The pronoun \"it\" refers to the rain that soaked into the soil in the previous sentence; bridging the sentences identifies what the roots drink.",
    },
    {
        "passage": "train-04", "type": "pb",
        "stem": "What do many towns depend on for drinking water?",
        "answer": "The water collected in aquifers",
        "distractors": ["Melted snow caught in nets", "Water from sweating glasses", "Ocean waves pumped inland"],
        "hint": "There the water collects in underground pools called aquifers. People dig wells to reach this hidden supply. Many towns depend on it for drinking water.",
        "reasoning": "\"it\" points back to the hidden underground supply named in the earlier sentences; resolving the pronoun answers the question.",
    },
    {
        "passage": "train-04", "type": "pb",
        "stem": "What falls as rain when it becomes too heavy for the air to hold?",
        "answer": "The joined water droplets",
        "distractors": ["The specks of dust", "The oak leaves", "The invisible vapor gas"],
        "hint": "When the droplets bump into each other, they join and grow heavier. At last they become too heavy for the air to hold. They fall as rain, or as snow if the air is cold enough.",
        "reasoning": "The repeated pronoun \"they\" traces back to the droplets that joined and grew; following the chain across sentences tells what falls.",
    },
    {
        "passage": "train-04", "type": "tc",
        "stem": "What is the change of warm water into rising vapor called?",
        "answer": "Evaporation",
        "distractors": ["Precipitation", "Condensation", "Collection"],
        "hint": "Warm water turns into an invisible gas called water vapor, which rises into the air. This change is called evaporation.",
        "reasoning": "\"This change\" is a noun phrase that refers to the transformation described in the previous sentence; linking the two gives the term.",
    },
    {
        "passage": "train-04", "type": "tc",
        "stem": "Which two forms of precipitation does the passage name?",
        "answer": "Rain and snow",
        "distractors": ["Fog and dew", "Hail and sleet", "Steam and frost"],
        "hint": "They fall as rain, or as snow if the air is cold enough. Any water that falls from the sky is called precipitation.",
        "reasoning": "The reader connects \"water that falls from the sky\" with the rain and snow of the previous sentence to see which forms count as precipitation.",
    },
    {
        "passage": "train-04", "type": "tc",
        "stem": "What happens to the water's journey when a drop finally reaches the ocean?",
        "answer": "The sun heats it and the cycle begins again",
        "distractors": ["It disappears forever", "It turns into an aquifer", "It freezes immediately"],
        "hint": "Scientists call this endless journey the water cycle. When it finally reaches the ocean, the sun is waiting, and the journey starts again.",
        "reasoning": "\"the journey\" at the end of the passage connects back to the endless journey defined at the start; joining the phrases shows the cycle repeats.",
    },
    {
        "passage": "train-04", "type": "gf",
        "stem": "Why does the vapor condense on the cold glass rather than on the warm table beside it?",
        "answer": "Vapor turns back to liquid when it touches something cold",
        "distractors": ["Glass attracts water magnetically", "Tables are fully waterproof", "Lemonade pulls vapor through the glass"],
        "hint": "A cold glass of lemonade sweats on a summer day because vapor in the air condenses on the chilled surface.",
        "reasoning": "The passage ties condensation to the chilled surface; the reader uses the general rule that cooling turns vapor to liquid to explain why the glass and not the table collects water.",
    },
    {
        "passage": "train-04", "type": "gf",
        "stem": "Why must people dig wells instead of scooping aquifer water from the surface?",
        "answer": "Aquifers lie deep underground beneath soil and rock",
        "distractors": ["Aquifer water floats into the clouds", "Wells clean the water by magic", "Surface water is always frozen"],
        "hint": "There the water collects in underground pools called aquifers. People dig wells to reach this hidden supply.",
        "reasoning": "The passage calls the supply hidden; the reader fills in that reaching underground water requires digging down to it.",
    },
    {
        "passage": "train-04", "type": "gf",
        "stem": "In which season would precipitation most likely fall as snow?",
        "answer": "Winter",
        "distractors": ["Summer", "Late spring", "Any season equally"],
        "hint": "They fall as rain, or as snow if the air is cold enough.",
        "reasoning": "The text ties snow to cold air but names no season; the reader supplies the common knowledge that winter air is coldest.",
    },
    {
        "passage": "train-04", "type": "gf",
        "stem": "According to the passage's idea, what could be true of the water you drank today?",
        "answer": "It may once have fallen as rain long before people existed",
        "distractors": ["It was created fresh this morning", "It has never touched the sea", "It can be used only once"],
        "hint": "The same water has been traveling between the sky, the land, and the sea for billions of years.",
        "reasoning": "The passage states the water is ancient and recycled; the reader combines this with general knowledge to conclude today's drinking water has a long history.",
    },
    # ----- train-05: Volcanoes (pb 3, tc 2, gf 4) -----
    {
        "passage": "train-05", "type": "pb",
        "stem": "What gathers in the magma chamber?",
        "answer": "The rising melted rock",
        "distractors": ["Ocean water", "Volcanic ash", "Cooled lava boulders"],
        "hint": "This melted rock is called magma. Because magma is lighter than the solid rock around it, it slowly rises. It gathers in a space called a magma chamber.",
        "reasoning": "The pronoun \"It\" that begins the last sentence refers to the rising magma of the previous sentence; bridging the sentences answers the question.",
    },
    {
        "passage": "train-05", "type": "pb",
        "stem": "What is made of tiny sharp pieces of rock and glass?",
        "answer": "Volcanic ash",
        "distractors": ["Campfire ash", "Magma deep underground", "Rich farm soil"],
        "hint": "The ash is not soft, like ash from a campfire. It is made of tiny sharp pieces of rock and glass.",
        "reasoning": "\"It\" refers to the volcanic ash in the previous sentence, not the campfire ash; resolving the pronoun correctly is required to answer.",
    },
    {
        "passage": "train-05", "type": "pb",
        "stem": "What do scientists rename once it pours onto the surface?",
        "answer": "Magma",
        "distractors": ["Ash", "Soil", "Steam"],
        "hint": "When pressure in the chamber grows too strong, the volcano erupts. Once magma pours onto the surface, scientists give it a new name: lava.",
        "reasoning": "The pronoun \"it\" stands for the magma that reaches the surface; the reader bridges to the earlier mention to know what is renamed.",
    },
    {
        "passage": "train-05", "type": "tc",
        "stem": "Why do some volcanoes grow as steep cones?",
        "answer": "Their thick, sticky lava piles up near the opening",
        "distractors": ["Wind blows ash into piles", "Earthquakes push the peaks upward", "Rain wears away their sides"],
        "hint": "Other lava is thick and sticky, and it piles up near the opening. Sticky lava builds steep cones that grow taller with every eruption.",
        "reasoning": "\"Sticky lava\" in the second sentence refers back to the thick lava described before; connecting the two statements explains the steep shape.",
    },
    {
        "passage": "train-05", "type": "tc",
        "stem": "What does the passage call \"the gray blanket\" that preserved Pompeii?",
        "answer": "The ash from Mount Vesuvius",
        "distractors": ["A woolen city cover", "Cooled runny lava", "Winter snow"],
        "hint": "In the year 79, ash from Mount Vesuvius buried the Roman city of Pompeii so quickly that much of the city was preserved under the gray blanket.",
        "reasoning": "\"The gray blanket\" is a noun phrase standing for the ash named earlier in the sentence; linking the phrases answers the question.",
    },
    {
        "passage": "train-05", "type": "gf",
        "stem": "Why would a thick ash cloud stop airplanes from flying?",
        "answer": "Sharp rock particles in the air can damage engines and windows",
        "distractors": ["Ash makes planes too heavy to take off", "Pilots dislike gray skies", "Ash clouds freeze the fuel"],
        "hint": "It is made of tiny sharp pieces of rock and glass. A thick ash cloud can turn day into night, stop airplanes from flying, and bury fields many kilometers away.",
        "reasoning": "The danger to airplanes is not explained; the reader combines the stated sharpness of ash with general knowledge about engines to fill the gap.",
    },
    {
        "passage": "train-05", "type": "gf",
        "stem": "What is a possible reason Pompeii is valuable to scientists today?",
        "answer": "The ash preserved the city much as it was in the year 79",
        "distractors": ["The city was never found again", "Lava turned the city to gold", "Vesuvius still hides the city"],
        "hint": "In the year 79, ash from Mount Vesuvius buried the Roman city of Pompeii so quickly that much of the city was preserved under the gray blanket.",
        "reasoning": "The text says the city was preserved; the reader adds the outside knowledge that preserved ruins let scientists study ancient life.",
    },
    {
        "passage": "train-05", "type": "gf",
        "stem": "Why might a country with volcanoes pay less to heat its homes?",
        "answer": "It can use the deep heat of volcanic rock to warm water",
        "distractors": ["Lava is sold as fuel in stores", "Volcano smoke warms the whole sky", "Ash burns like coal"],
        "hint": "Deep heat from volcanic rock warms water that some countries pipe into homes and power plants.",
        "reasoning": "The passage describes piping warmed water; the reader infers the cost savings from general knowledge about heating bills.",
    },
    {
        "passage": "train-05", "type": "gf",
        "stem": "What does the passage suggest lies beneath the islands of Hawaii?",
        "answer": "Volcanoes rising from the sea floor",
        "distractors": ["A sunken ancient city", "Giant sheets of ice", "Hollow caves full of air"],
        "hint": "Entire islands, including the islands of Hawaii, are the tops of volcanoes that grew from the sea floor, one eruption at a time.",
        "reasoning": "If the islands are the tops of volcanoes, the reader fills in that the rest of each volcano must continue downward under the water.",
    },
    # ----- train-06: The Printing Press (pb 3, tc 2, gf 3) -----
    {
        "passage": "train-06", "type": "pb",
        "stem": "Who made small metal blocks that each carried one raised letter?",
        "answer": "Johannes Gutenberg",
        "distractors": ["A copying monk", "A wine farmer", "A Roman scribe"],
        "hint": "Around 1440, a German goldsmith named Johannes Gutenberg changed that. He made small metal blocks, each carrying one raised letter.",
        "reasoning": "The pronoun \"He\" refers to Gutenberg, named in the previous sentence; the bridge identifies the maker.",
    },
    {
        "passage": "train-06", "type": "pb",
        "stem": "Who rebuilt the farmers' screw press so it could push paper against inked type?",
        "answer": "Johannes Gutenberg",
        "distractors": ["The farmers who owned it", "A team of monks", "The king of Germany"],
        "hint": "Gutenberg's idea borrowed from machines people already knew. Farmers had used screw presses for centuries to crush grapes for wine and olives for oil. He rebuilt that press to push paper evenly against his inked type.",
        "reasoning": "The pronoun \"He\" must be traced back to Gutenberg, named at the start of the paragraph, to know who rebuilt the press.",
    },
    {
        "passage": "train-06", "type": "pb",
        "stem": "What are among the most valuable books in the world today?",
        "answer": "The surviving copies of the Gutenberg Bible",
        "distractors": ["Hand-copied scrolls from Rome", "Modern paperback novels", "The printer's account books"],
        "hint": "About one hundred eighty copies were printed, and each one looked as regular and handsome as careful handwriting. Fewer than fifty survive today, and they are among the most valuable books in the world.",
        "reasoning": "\"they\" refers to the fewer than fifty surviving copies mentioned just before; bridging the sentences identifies the valuable books.",
    },
    {
        "passage": "train-06", "type": "tc",
        "stem": "What did the printer reuse to build the next page?",
        "answer": "The metal letter blocks from the finished page",
        "distractors": ["The paper from old books", "The monk's quill pens", "The wine press screws"],
        "hint": "He made small metal blocks, each carrying one raised letter. These blocks, called movable type, could be arranged into words, locked into a frame, coated with ink, and pressed onto paper. When the page was done, the printer broke the frame apart and reused the same letters to build the next page.",
        "reasoning": "\"the same letters\" connects back to the metal blocks each carrying one raised letter; the reader links the noun phrases across sentences.",
    },
    {
        "passage": "train-06", "type": "tc",
        "stem": "What example does the passage give of new ideas traveling faster?",
        "answer": "Reformers could reach readers they would never meet",
        "distractors": ["Monks copied more slowly", "Books became more expensive", "Screws pressed grapes faster"],
        "hint": "New ideas traveled faster than ever before. Scientists could compare exact copies of the same charts, and reformers could spread their arguments to readers they would never meet.",
        "reasoning": "The second sentence gives concrete cases of the faster travel stated in the first; connecting the claim to its examples answers the question.",
    },
    {
        "passage": "train-06", "type": "gf",
        "stem": "Why did so few people own books before the printing press?",
        "answer": "Hand copying made each book slow and expensive to produce",
        "distractors": ["Paper had not been invented", "Reading was against the law", "Books were too heavy to carry"],
        "hint": "Monks worked for months or years to copy a single volume, shaping each letter with a quill pen. Hand-copied books were so rare and costly that only churches, rulers, and the very rich owned them.",
        "reasoning": "The passage describes the slow copying and the high cost separately; the reader joins them with common knowledge about scarce, labor-heavy goods.",
    },
    {
        "passage": "train-06", "type": "gf",
        "stem": "Why would printers want every reader to recognize their spellings?",
        "answer": "Printed books traveled to many distant readers, not one local buyer",
        "distractors": ["Printers could not read themselves", "Ink only worked on certain letters", "The law required one spelling"],
        "hint": "Printers needed spellings that every reader could recognize, so the wild variety of local spellings slowly settled into standard forms.",
        "reasoning": "The motive is implied: printed copies traveled far, so the reader infers that shared spellings made the same book readable everywhere.",
    },
    {
        "passage": "train-06", "type": "gf",
        "stem": "What \"small reusable pieces\" do glowing screens build messages from today?",
        "answer": "Individual letters and characters of text",
        "distractors": ["Drops of printing ink", "Metal page frames", "Quill pen strokes"],
        "hint": "Today, most words travel as glowing text on screens, but every web page still borrows Gutenberg's deep idea: build each message from small reusable pieces.",
        "reasoning": "The passage never names the modern pieces; the reader uses everyday knowledge of typing letters on screens to fill in the parallel.",
    },
]
