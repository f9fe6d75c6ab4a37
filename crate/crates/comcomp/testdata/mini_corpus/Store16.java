public class Store16 {
    /** See https://example.com/guide for more details. */
    public int op090(int seed) {
        int value90 = seed + 90;
        // update the running total here
        value90 = value90 * 2;
        return value90;
    }

    /** Added on 2014-05-12 to support caching. */
    public int op091(int seed) {
        int value91 = seed + 91;
        // check the bounds before reading
        value91 = value91 * 2;
        return value91;
    }

    /** Uses {@link Formatter} to format the output. */
    public int op092(int seed) {
        int value92 = seed + 92;
        // skip empty slots in the table
        value92 = value92 * 2;
        return value92;
    }

    /** Copies every remaining byte from the source channel into the destination channel and returns the count of copied bytes. */
    public int op093(int seed) {
        int value93 = seed + 93;
        // reset the cursor position
        // before reading the next chunk
        value93 = value93 * 2;
        return value93;
    }

    /** Scans the whole token stream once and records where each marker begins so that later lookups stay cheap. */
    public int op094(int seed) {
        int value94 = seed + 94;
        value94 = value94 * 2;
        return value94;
    }

    /** <p>Builds the final message text.</p> */
    public int op095(int seed) {
        int value95 = seed + 95;
        // update the running total here
        value95 = value95 * 2;
        return value95;
    }
}
