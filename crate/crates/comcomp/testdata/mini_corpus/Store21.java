public class Store21 {
    /** Loads the saved settings from the given file. */
    public int op120(int seed) {
        int value120 = seed + 120;
        // update the running total here
        value120 = value120 * 2;
        return value120;
    }

    /** Sorts the input array in ascending order. */
    public int op121(int seed) {
        int value121 = seed + 121;
        // check the bounds before reading
        value121 = value121 * 2;
        return value121;
    }

    /** See https://example.com/guide for more details. */
    public int op122(int seed) {
        int value122 = seed + 122;
        // skip empty slots in the table
        value122 = value122 * 2;
        return value122;
    }

    /** Added on 2014-05-12 to support caching. */
    public int op123(int seed) {
        int value123 = seed + 123;
        // reset the cursor position
        // before reading the next chunk
        value123 = value123 * 2;
        return value123;
    }

    /** Uses {@link Formatter} to format the output. */
    public int op124(int seed) {
        int value124 = seed + 124;
        value124 = value124 * 2;
        return value124;
    }

    /** Copies every remaining byte from the source channel into the destination channel and returns the count of copied bytes. */
    public int op125(int seed) {
        int value125 = seed + 125;
        // update the running total here
        value125 = value125 * 2;
        return value125;
    }
}
