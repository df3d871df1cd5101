"""Built-in task texts for demos, golden logs, and the study-style tasks.

Keys follow ``exp1-*`` / ``exp2-*`` for the two task families plus a set of
short story openers. Event-log headers reference these by ``task_id``.
"""

TASK_TEXTS: dict[str, str] = {
    # -- extension / shortening drill texts --------------------------------
    "exp1-extend-incomplete": (
        "Climate change refers to long-term shifts in temperatures and weather "
        "patterns. These shifts are increasingly driven by human activities such "
        "as the burning of fossil fuels, deforestation, and industrial "
        "processes, which"
    ),
    "exp1-extend": (
        "Climate change refers to long-term shifts in temperatures and weather "
        "patterns. These shifts may be natural, such as through variations in "
        "the solar cycle."
    ),
    "exp1-shorten-incomplete": (
        "The internet is a global network of interconnected computers that "
        "communicate using standardized protocols. This vast and ever-expanding "
        "network enables the rapid exchange of information across the world, "
        "facilitating everything from basic email communication to complex"
    ),
    "exp1-shorten": (
        "The internet is a global network of interconnected computers that "
        "communicate using standardized protocols. It allows users to access "
        "and share information quickly and easily. The internet supports "
        "various services, including email, social media, and online shopping. "
        "It has transformed how we communicate, learn, and conduct business "
        "worldwide."
    ),
    "exp1-combination": (
        "Photosynthesis is the process by which green plants, algae, and some "
        "bacteria convert light energy into chemical energy. They use sunlight, "
        "carbon dioxide, and water to produce glucose and oxygen. Chlorophyll, "
        "the green pigment in plants, captures sunlight for this process. "
        "Photosynthesis is essential for life on Earth, providing food and "
        "oxygen for most living organisms."
    ),
    # -- open editing tasks: remove the off-topic sentence / extend ---------
    "exp2-chat-1-remove": (
        "Tomatoes are one of the most popular vegetables grown in home gardens. "
        "Skateboards have been popular since the 1950s and are used in various "
        "sports competitions. Many people enjoy growing tomatoes because they "
        "are relatively easy to cultivate and can be used in a wide range of "
        "dishes."
    ),
    "exp2-chat-1-extend": (
        "The process of growing tomatoes involves several key steps. Firstly, "
        "tomatoes require well-drained soil that is rich in organic matter. "
        "This helps the plants to thrive and produce a good yield. By following "
        "these steps, you can ensure a successful tomato harvest."
    ),
    "exp2-chat-2-remove": (
        "The art of photography has evolved significantly over the years. "
        "Bicycles have been a popular mode of transportation for over a century "
        "and are widely used for commuting and recreation. Many people find "
        "photography to be a rewarding hobby because it allows them to capture "
        "and preserve memories."
    ),
    "exp2-chat-2-extend": (
        "To capture a great photograph, there are a few essential tips to keep "
        "in mind. Firstly, understanding the basics of lighting is crucial, as "
        "it can dramatically affect the mood and clarity of an image. By "
        "mastering these techniques, you can significantly improve the quality "
        "of your photos."
    ),
    "exp2-chat-3-remove": (
        "Reading books is a popular pastime that can enrich one's knowledge and "
        "imagination. Computers have revolutionized the way we work and "
        "communicate, making tasks easier and more efficient. Many people enjoy "
        "reading because it allows them to escape into different worlds and "
        "perspectives."
    ),
    "exp2-chat-3-extend": (
        "To fully enjoy reading, it's important to choose books that match your "
        "interests and reading level. Firstly, selecting a quiet and "
        "comfortable place to read can enhance your concentration and "
        "enjoyment. By taking these steps, you can make reading a more "
        "fulfilling experience."
    ),
    "exp2-gesture-1-remove": (
        "Cooking at home can be a rewarding experience that allows you to "
        "experiment with different ingredients and flavors. Automobiles have "
        "become an essential part of modern life, providing convenience and "
        "mobility. Many people find cooking to be a creative outlet that also "
        "promotes healthier eating habits."
    ),
    "exp2-gesture-1-extend": (
        "There are a few key tips to keep in mind when cooking. Firstly, it's "
        "important to use fresh ingredients, as they can significantly enhance "
        "the taste and nutritional value of your dishes. By following these "
        "tips, you can improve your cooking skills and enjoy better meals."
    ),
    "exp2-gesture-2-remove": (
        "Gardening is a relaxing activity that allows you to connect with "
        "nature and grow your own plants. The invention of the airplane has "
        "made long-distance travel faster and more accessible. Many people "
        "enjoy gardening because it provides a sense of accomplishment and "
        "improves the beauty of their surroundings."
    ),
    "exp2-gesture-2-extend": (
        "Successful gardening requires some basic knowledge and attention to "
        "detail. Firstly, understanding the specific needs of your plants, such "
        "as sunlight and watering, is crucial for their growth. By adhering to "
        "these guidelines, you can create a thriving garden that brings you "
        "joy."
    ),
    "exp2-gesture-3-remove": (
        "Exercise is an important aspect of maintaining a healthy lifestyle. "
        "Smartphones have changed the way we interact with the world, providing "
        "instant access to information and communication. Regular physical "
        "activity can help improve both mental and physical well-being."
    ),
    "exp2-gesture-3-extend": (
        "There are several factors to consider when establishing a workout "
        "routine. Firstly, it's essential to set realistic goals that align "
        "with your fitness level and interests. By doing so, you can create a "
        "sustainable exercise plan that keeps you motivated."
    ),
}

SHORT_STORIES: dict[str, str] = {
    "time-travel": (
        "In the year 3021, a young scientist named Finn discovered a device "
        "that could send him back in time. When he accidentally traveled to "
        "1921, he had to figure out how to return without altering history. "
        "Along the way, he uncovered a hidden truth about his own family that "
        "changed everything."
    ),
    "magical-adventure": (
        "One day, Lena found an old compass in an abandoned antique shop, but "
        "instead of pointing north, it led her to a secret, enchanted forest. "
        "As she followed the compass, she encountered talking animals and an "
        "ancient, wise tree that entrusted her with an important task. With "
        "bravery and cleverness, Lena solved the forest's riddle and discovered "
        "a treasure far more valuable than gold."
    ),
    "space-expedition": (
        "Captain Mira and her crew landed on an unknown planet covered in "
        "glowing crystals that emitted a strange energy. As they explored the "
        "mysterious caves, they uncovered an ancient civilization trapped "
        "within the crystals. Mira faced a tough decision: should she destroy "
        "the crystals and free the beings inside, even if it meant risking "
        "their mission?"
    ),
    "enchanted-market": (
        "At the annual Wonderland Market, little Timmy stumbled upon a stall "
        "selling wishes in bottles. Mesmerized by the shimmering elixirs, he "
        "bought a bottle that promised to make his wildest dreams come true. "
        "When he made his wish, a portal opened to a world beyond his "
        "imagination, full of adventure and danger."
    ),
    "lost-city": (
        "Deep in the jungle, archaeologist Dr. Elena found an ancient map that "
        "revealed the way to a lost city of gold. With a team of explorers, "
        "she embarked on a perilous journey through rivers and over mountains, "
        "until they finally stood before the gates of the legendary city. But "
        "the city was not abandoned, and its mysterious inhabitants had their "
        "own plans for the intruders."
    ),
}


def initial_text(task_id: str) -> str:
    """Starting text for a task id; story ids are accepted too."""
    if task_id in TASK_TEXTS:
        return TASK_TEXTS[task_id]
    if task_id in SHORT_STORIES:
        return SHORT_STORIES[task_id]
    raise KeyError(f"unknown task id: {task_id}")
